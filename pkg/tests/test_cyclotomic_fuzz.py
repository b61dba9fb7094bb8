"""Differential fuzzing of the exact scalar core against independent oracles.

Random expression trees are evaluated twice: once through the exact
cyclotomic arithmetic and once in 60-digit mpmath complex arithmetic with
each leaf expanded from its definition. Agreement over thousands of mixed
add/multiply/conjugate/negate steps would be wildly improbable if the
convolution, reduction, lifting or conjugation tables were wrong anywhere.
"""

import random
from fractions import Fraction

import mpmath
import sympy
from sympy.polys.specialpolys import cyclotomic_poly

from quditbases import Cyclotomic, cyclotomic_polynomial, root_of_unity

mpmath.mp.dps = 60

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24]


def mp_root(n, e):
    angle = mpmath.mpf(2) * mpmath.pi * e / n
    return mpmath.mpc(mpmath.cos(angle), mpmath.sin(angle))


def mp_value(scalar):
    total = mpmath.mpc(0)
    for i, c in enumerate(scalar.coefficients):
        total += mpmath.mpf(c.numerator) / c.denominator * mp_root(scalar.conductor, i)
    return total


def random_leaf(rng):
    kind = rng.randrange(3)
    if kind == 0:
        value = Fraction(rng.randint(-4, 4), rng.randint(1, 5))
        return Cyclotomic.from_rational(value), mpmath.mpc(value.numerator) / value.denominator
    n = rng.choice(CONDUCTORS)
    e = rng.randrange(n)
    exact = root_of_unity(n, e)
    approx = mp_root(n, e)
    if kind == 2:
        scale = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        exact = exact * scale
        approx = approx * mpmath.mpf(scale.numerator) / scale.denominator
    return exact, approx


def test_random_expressions_match_high_precision_arithmetic():
    rng = random.Random(101)
    for _ in range(300):
        exact, approx = random_leaf(rng)
        for _ in range(rng.randrange(2, 8)):
            op = rng.randrange(4)
            if op == 0:
                other_exact, other_approx = random_leaf(rng)
                exact = exact + other_exact
                approx = approx + other_approx
            elif op == 1:
                other_exact, other_approx = random_leaf(rng)
                exact = exact * other_exact
                approx = approx * other_approx
            elif op == 2:
                exact = exact.conjugate()
                approx = mpmath.conj(approx)
            else:
                exact = -exact
                approx = -approx
        assert abs(mp_value(exact) - approx) < mpmath.mpf(10) ** -40
        mag = exact.magnitude_squared()
        assert abs(mp_value(mag) - abs(approx) ** 2) < mpmath.mpf(10) ** -40


def test_lift_preserves_value():
    rng = random.Random(103)
    for _ in range(200):
        n = rng.choice(CONDUCTORS)
        deg = len(cyclotomic_polynomial(n)) - 1
        value = Cyclotomic(
            n, [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg)]
        )
        multiple = n * rng.choice([2, 3, 4, 5])
        lifted = value.lift(multiple)
        assert lifted.conductor == multiple
        assert lifted == value
        assert abs(mp_value(lifted) - mp_value(value)) < mpmath.mpf(10) ** -40


def test_cyclotomic_polynomials_match_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 65):
        ours = cyclotomic_polynomial(n)
        theirs = sympy.Poly(cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert list(ours) == [int(c) for c in theirs]


def test_root_powers_satisfy_minimal_polynomial():
    for n in range(1, 40):
        phi = cyclotomic_polynomial(n)
        zeta = root_of_unity(n, 1)
        total = Cyclotomic.zero(n)
        power = Cyclotomic.one(n)
        for coeff in phi:
            total = total + power * coeff
            power = power * zeta
        assert total.is_zero()
