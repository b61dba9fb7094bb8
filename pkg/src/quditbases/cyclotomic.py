"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Every scalar in this package lives in some Q(zeta_N) with
zeta_N = exp(2*pi*i/N). A value is stored as rational coordinates over the
power basis zeta^0 .. zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
polynomial. That canonical form is unique, so equality, zero tests and
magnitude comparisons are decided exactly instead of within a floating
tolerance.

Internally the coordinates are one integer vector over a shared positive
denominator with overall gcd 1. The hot paths (convolution, reduction,
conjugation) then run in plain integer arithmetic; Fractions only appear at
the API boundary.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "euler_phi",
    "cyclotomic_polynomial",
]

RationalLike = Union[int, Fraction]


def euler_phi(n: int) -> int:
    """Euler's totient by trial division; intended for small n."""
    if n <= 0:
        raise ValueError("euler_phi expects n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def _exact_polydiv(num: list[int], den: list[int]) -> list[int]:
    # den is monic with integer coefficients; the division must be exact
    out = [0] * (len(num) - len(den) + 1)
    rest = list(num)
    for shift in range(len(out) - 1, -1, -1):
        c = rest[shift + len(den) - 1]
        out[shift] = c
        if c:
            for i, d in enumerate(den):
                rest[shift + i] -= c * d
    if any(rest):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first.

    Computed by exact division of x^n - 1 by the cyclotomic polynomials of
    the proper divisors of n, so no lookup table is involved.
    """
    if n <= 0:
        raise ValueError("cyclotomic_polynomial expects n >= 1")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_polydiv(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class _Field:
    """Cached per-conductor data: reduction rows and canonical root powers."""

    __slots__ = ("n", "degree", "reduction", "powers", "roots")

    def __init__(self, n: int) -> None:
        phi_poly = cyclotomic_polynomial(n)
        deg = len(phi_poly) - 1
        self.n = n
        self.degree = deg
        # zeta^deg expressed over the power basis
        base = tuple(-c for c in phi_poly[:deg])

        def shifted(vec: tuple[int, ...]) -> tuple[int, ...]:
            # multiply by zeta and reduce the single overflow coefficient
            out = [0] * deg
            for t in range(deg - 1):
                out[t + 1] = vec[t]
            top = vec[deg - 1]
            if top:
                for t in range(deg):
                    out[t] += top * base[t]
            return tuple(out)

        # rows for exponents deg .. 2*deg-2, used to fold convolutions
        rows: list[tuple[int, ...]] = []
        cur = base
        for _ in range(deg - 1):
            rows.append(cur)
            cur = shifted(cur)
        self.reduction = tuple(rows)

        powers: list[tuple[int, ...]] = []
        vec = tuple([1] + [0] * (deg - 1))
        for _ in range(n):
            powers.append(vec)
            vec = shifted(vec)
        self.powers = tuple(powers)

        self.roots = tuple(cmath.exp(2j * math.pi * k / n) for k in range(n))


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    if n <= 0:
        raise ValueError("conductor must be >= 1")
    return _Field(n)


def _normalized(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        num = [-c for c in num]
    if den == 1:
        return tuple(num), 1
    g = math.gcd(den, *num)
    if g > 1:
        den //= g
        num = [c // g for c in num]
    return tuple(num), den


class Cyclotomic:
    """A value of Q(zeta_N) in canonical reduced form.

    Instances are immutable. Mixed-conductor arithmetic lifts both operands
    into Q(zeta_lcm) first, and equality compares the lifted canonical
    forms, so ``root_of_unity(6, 2) == root_of_unity(3, 1)``. Values are
    deliberately unhashable: no single-conductor canonical key is kept.
    """

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, conductor: int, coeffs: Iterable[RationalLike]) -> None:
        f = _field(conductor)
        vals = [Fraction(c) for c in coeffs]
        if len(vals) > f.degree:
            raise ValueError(
                f"at most phi({conductor}) = {f.degree} coefficients allowed, got {len(vals)}"
            )
        vals.extend([Fraction(0)] * (f.degree - len(vals)))
        den = 1
        for v in vals:
            den = den * v.denominator // math.gcd(den, v.denominator)
        num = [int(v.numerator * (den // v.denominator)) for v in vals]
        self._n = conductor
        self._num, self._den = _normalized(num, den)

    @classmethod
    def _raw(cls, n: int, num: tuple[int, ...], den: int) -> "Cyclotomic":
        # trusted constructor: num/den already canonical for conductor n
        self = object.__new__(cls)
        self._n = n
        self._num = num
        self._den = den
        return self

    # ------------------------------------------------------------------
    # factories

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyclotomic":
        deg = _field(conductor).degree
        return cls._raw(conductor, (0,) * deg, 1)

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyclotomic":
        f = _field(conductor)
        return cls._raw(conductor, f.powers[0], 1)

    @classmethod
    def from_rational(cls, value: RationalLike, conductor: int = 1) -> "Cyclotomic":
        v = Fraction(value)
        deg = _field(conductor).degree
        num = [v.numerator] + [0] * (deg - 1)
        return cls._raw(conductor, tuple(num), v.denominator)

    # ------------------------------------------------------------------
    # structure

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Canonical rational coordinates over zeta^0 .. zeta^(phi(N)-1)."""
        return tuple(Fraction(c, self._den) for c in self._num)

    def lift(self, conductor: int) -> "Cyclotomic":
        """Re-express the value in Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self._n:
            return self
        if conductor % self._n:
            raise ValueError("lift target must be a multiple of the conductor")
        f = _field(conductor)
        k = conductor // self._n
        acc = [0] * f.degree
        powers = f.powers
        for i, c in enumerate(self._num):
            if c:
                row = powers[(i * k) % conductor]
                for t, r in enumerate(row):
                    if r:
                        acc[t] += c * r
        num, den = _normalized(acc, self._den)
        return Cyclotomic._raw(conductor, num, den)

    def _paired(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self._n == other._n:
            return self, other
        m = self._n * other._n // math.gcd(self._n, other._n)
        return self.lift(m), other.lift(m)

    @staticmethod
    def _coerce(value: object) -> "Cyclotomic | None":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.from_rational(value)
        return None

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: object) -> "Cyclotomic":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._paired(rhs)
        da, db = a._den, b._den
        if da == 1 and db == 1:
            num = [x + y for x, y in zip(a._num, b._num)]
            return Cyclotomic._raw(a._n, tuple(num), 1)
        num = [x * db + y * da for x, y in zip(a._num, b._num)]
        vec, den = _normalized(num, da * db)
        return Cyclotomic._raw(a._n, vec, den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._raw(self._n, tuple(-c for c in self._num), self._den)

    def __sub__(self, other: object) -> "Cyclotomic":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Cyclotomic":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            v = Fraction(other)
            num = [c * v.numerator for c in self._num]
            vec, den = _normalized(num, self._den * v.denominator)
            return Cyclotomic._raw(self._n, vec, den)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._paired(other)
        f = _field(a._n)
        deg = f.degree
        buf = [0] * (2 * deg - 1)
        bnum = b._num
        for i, ai in enumerate(a._num):
            if ai:
                for j, bj in enumerate(bnum):
                    if bj:
                        buf[i + j] += ai * bj
        out = buf[:deg]
        reduction = f.reduction
        for e in range(deg, 2 * deg - 1):
            c = buf[e]
            if c:
                row = reduction[e - deg]
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        vec, den = _normalized(out, a._den * b._den)
        return Cyclotomic._raw(a._n, vec, den)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.one(self._n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta^e -> zeta^(-e)."""
        f = _field(self._n)
        acc = [0] * f.degree
        n = self._n
        powers = f.powers
        for i, c in enumerate(self._num):
            if c:
                row = powers[(n - i) % n]
                for t, r in enumerate(row):
                    if r:
                        acc[t] += c * r
        num, den = _normalized(acc, self._den)
        return Cyclotomic._raw(self._n, num, den)

    def magnitude_squared(self) -> "Cyclotomic":
        """|value|^2 as an exact scalar (fixed by conjugation)."""
        return self * self.conjugate()

    # ------------------------------------------------------------------
    # views

    def as_rational(self) -> Fraction | None:
        """The rational value when only the zeta^0 coordinate is nonzero."""
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    def as_complex(self) -> complex:
        """Floating approximation from the canonical form."""
        roots = _field(self._n).roots
        re = []
        im = []
        for i, c in enumerate(self._num):
            if c:
                r = roots[i]
                re.append(c * r.real)
                im.append(c * r.imag)
        if not re:
            return 0j
        return complex(math.fsum(re) / self._den, math.fsum(im) / self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    # ------------------------------------------------------------------
    # comparison and rendering

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._paired(rhs)
        return a._num == b._num and a._den == b._den

    __hash__ = None  # type: ignore[assignment]

    def to_text(self) -> str:
        """Canonical serialization ``conductor:N;coeffs:c0,c1,...``."""
        coeffs = ",".join(str(Fraction(c, self._den)) for c in self._num)
        return f"conductor:{self._n};coeffs:{coeffs}"

    @classmethod
    def from_text(cls, text: str) -> "Cyclotomic":
        try:
            head, tail = text.split(";", 1)
            if not head.startswith("conductor:") or not tail.startswith("coeffs:"):
                raise ValueError
            n = int(head[len("conductor:"):])
            coeffs = [Fraction(part) for part in tail[len("coeffs:"):].split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a canonical scalar string: {text!r}") from exc
        if len(coeffs) != _field(n).degree:
            raise ValueError(
                f"expected phi({n}) = {_field(n).degree} coefficients, got {len(coeffs)}"
            )
        return cls(n, coeffs)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.to_text()!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self._num):
            if not c:
                continue
            coeff = Fraction(c, self._den)
            if i == 0:
                parts.append(str(coeff))
            else:
                mon = f"z{self._n}" if i == 1 else f"z{self._n}^{i}"
                if coeff == 1:
                    parts.append(mon)
                elif coeff == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{coeff}*{mon}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def root_of_unity(conductor: int, exponent: int) -> Cyclotomic:
    """zeta_N^e in canonical form; the exponent is taken modulo N."""
    f = _field(conductor)
    return Cyclotomic._raw(conductor, f.powers[exponent % conductor], 1)
