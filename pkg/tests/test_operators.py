import random
from fractions import Fraction

import numpy as np
import pytest

from quditbases import (
    Cyclotomic,
    OperatorMatrix,
    RadicalDiagonal,
    clock_matrix,
    eigenvalue_of,
    ket,
    ladder_modulus,
    mub_vector,
    phased_shift_matrix,
    root_of_unity,
    shift_matrix,
    su2_report,
    weyl_report,
)

from tables import QUTRIT_PHASED_SHIFTS


def as_int_rows(matrix):
    return [[e.as_rational() for e in row] for row in matrix.rows]


def test_phased_shift_qubit_matrices():
    assert as_int_rows(phased_shift_matrix(2, 1)) == [[0, -1], [1, 0]]
    assert as_int_rows(phased_shift_matrix(2, 0)) == [[0, 1], [1, 0]]


def test_phased_shift_qutrit_matrices():
    for a, rows in QUTRIT_PHASED_SHIFTS.items():
        matrix = phased_shift_matrix(3, a)
        for r in range(3):
            for c in range(3):
                assert matrix.entry(r, c) == rows[r][c]


def test_phased_shift_range_errors():
    with pytest.raises(ValueError):
        phased_shift_matrix(3, 3)
    with pytest.raises(ValueError):
        phased_shift_matrix(3, -1)
    with pytest.raises(ValueError):
        phased_shift_matrix(0, 0)


def test_clock_matrix_values():
    assert as_int_rows(clock_matrix(2)) == [[1, 0], [0, -1]]
    z = clock_matrix(3)
    q = root_of_unity(3, 1)
    assert z.entry(1, 1) == q
    assert z.entry(2, 2) == q * q
    assert z.entry(0, 1) == 0


def test_clock_is_adjoint_shift_times_first_phased_shift():
    for dim in range(1, 9):
        lhs = shift_matrix(dim).adjoint() @ phased_shift_matrix(dim, 1 % dim)
        assert lhs == clock_matrix(dim)


def test_ladder_modulus_examples():
    # oracle: (d-1-k)(k+1) evaluated directly
    assert ladder_modulus(2).radicands == (1, 0)
    assert ladder_modulus(3).radicands == (2, 2, 0)
    assert ladder_modulus(1).radicands == (0,)
    for dim in range(1, 20):
        diag = ladder_modulus(dim)
        assert diag.radicands[-1] == 0
        assert diag.squared() == tuple((dim - 1 - k) * (k + 1) for k in range(dim))


def test_radical_diagonal_validation():
    with pytest.raises(ValueError):
        RadicalDiagonal((1, -1))
    h = RadicalDiagonal((2, 0))
    assert np.allclose(h.as_float_array(), np.diag([2 ** 0.5, 0.0]))


def test_matrix_product_and_unitarity():
    z3 = clock_matrix(3)
    assert (z3.adjoint() @ z3).is_identity()
    product = shift_matrix(2) @ clock_matrix(2)
    assert as_int_rows(product) == [[0, -1], [1, 0]]
    assert product == phased_shift_matrix(2, 1)


def test_apply_clock_to_ket():
    q = root_of_unity(3, 1)
    image = clock_matrix(3).apply(ket(3, 2))
    assert image == ket(3, 2) * (q * q)


def test_clock_spectrum():
    for dim in range(1, 10):
        z = clock_matrix(dim)
        for k in range(dim):
            assert z.apply(ket(dim, k)) == ket(dim, k) * root_of_unity(dim, k)
            assert eigenvalue_of(z, ket(dim, k)) == root_of_unity(dim, k)


def test_matrix_power():
    x = shift_matrix(5)
    assert (x ** 5).is_identity()
    assert x ** 1 == x
    assert (x ** 0).is_identity()
    with pytest.raises(ValueError):
        x ** -1


def test_unitarity_sweep():
    for dim in range(1, 17):
        assert clock_matrix(dim).is_unitary()
        assert shift_matrix(dim).is_unitary()
    for dim in (2, 3, 4, 5, 8, 12, 16):
        for a in range(dim):
            assert phased_shift_matrix(dim, a).is_unitary()


def test_phased_shift_commutes_with_clock_up_to_q():
    for dim in range(1, 13):
        z = clock_matrix(dim)
        q = root_of_unity(dim, 1)
        for a in range(dim):
            v = phased_shift_matrix(dim, a)
            assert v @ z == (z @ v) * q


def test_clock_shifts_mub_vectors():
    # z sends |a, alpha> to q^-1 |a, alpha - 1>, entrywise exactly
    for dim in range(2, 9):
        z = clock_matrix(dim)
        q_inv = root_of_unity(dim, dim - 1)
        for a in range(dim):
            for alpha in range(dim):
                image = z.apply(mub_vector(dim, a, alpha))
                expected = mub_vector(dim, a, (alpha - 1) % dim) * q_inv
                assert image == expected


def test_kron_matches_tensor_action():
    rng = random.Random(31)
    a = phased_shift_matrix(2, 1)
    b = clock_matrix(3)
    big = a.kron(b)
    for _ in range(10):
        u = ket(2, rng.randrange(2))
        v = ket(3, rng.randrange(3))
        assert big.apply(u.tensor(v)) == a.apply(u).tensor(b.apply(v))


def test_weyl_report_trivial_dimension():
    report = weyl_report(1)
    assert report.passed


def test_weyl_report_qubit_details():
    report = weyl_report(2)
    assert report.passed
    # oracle: [[0,-1],[1,0]] squared is -identity, so the -1 sign restores it
    v = phased_shift_matrix(2, 1)
    assert (v @ v) == OperatorMatrix.identity(2) * Fraction(-1)
    assert ((v @ v) * Fraction(-1)).is_identity()


def test_weyl_report_qutrit_phases_are_plus_one():
    report = weyl_report(3)
    assert report.passed
    for a in range(3):
        v = phased_shift_matrix(3, a)
        assert (v ** 3).is_identity()


def test_weyl_report_sweep():
    for dim in range(1, 13):
        assert weyl_report(dim).passed


def test_su2_exact_part_matches_direct_diagonal():
    # oracle: h^2 = diag(2, 2, 0); shift conjugation gives diag(0, 2, 2);
    # half the difference is diag(1, 0, -1)
    n = ladder_modulus(3).squared()
    assert n == (2, 2, 0)
    shifted = tuple(n[(k - 1) % 3] for k in range(3))
    assert shifted == (0, 2, 2)
    jz = [Fraction(n[k] - shifted[k], 2) for k in range(3)]
    assert jz == [1, 0, -1]
    report = su2_report(3, 0)
    assert report.passed


def test_su2_qubit_half_integer_weights():
    n = ladder_modulus(2).squared()
    shifted = tuple(n[(k - 1) % 2] for k in range(2))
    jz = [Fraction(n[k] - shifted[k], 2) for k in range(2)]
    assert jz == [Fraction(1, 2), Fraction(-1, 2)]
    assert su2_report(2, 0).passed


def test_su2_report_sweep():
    for dim in range(1, 26):
        for a in range(dim):
            report = su2_report(dim, a, 1e-12)
            assert report.passed, (dim, a)


def test_raising_operator_kills_the_wrap_column():
    # modulus * shift sends |0> through the wrap entry, whose radicand
    # (d-1-k)(k+1) at k = d-1 is 0, so the image of |0> vanishes
    for dim in range(2, 13):
        n = ladder_modulus(dim).squared()
        assert n[(0 - 1) % dim] == 0
        h = np.diag([v ** 0.5 for v in n])
        shift = phased_shift_matrix(dim, 1).as_complex_array()
        j_plus = h @ shift
        assert np.all(j_plus[:, 0] == 0)


def test_su2_report_validation():
    with pytest.raises(ValueError):
        su2_report(3, 3)
    with pytest.raises(ValueError):
        su2_report(3, 0, tol=0.0)


def test_report_json_schema():
    report = su2_report(4, 1)
    data = report.to_json_dict()
    assert set(data) == {"name", "dim", "passed", "checks"}
    for check in data["checks"]:
        assert set(check) == {"check", "exact", "passed", "max_residual"}
    exact = [c for c in data["checks"] if c["exact"]]
    floats = [c for c in data["checks"] if not c["exact"]]
    assert all(c["max_residual"] is None for c in exact)
    assert all(isinstance(c["max_residual"], float) for c in floats)


def test_eigenvalue_of_rejects_non_eigenvectors():
    z = clock_matrix(2)
    assert eigenvalue_of(z, mub_vector(2, 0, 0)) is None


def test_matrix_json_and_equality():
    x = shift_matrix(3)
    data = x.to_json_dict()
    rebuilt = OperatorMatrix(
        [[Cyclotomic.from_text(t) for t in row] for row in data["rows"]]
    )
    assert rebuilt == x
    assert x != clock_matrix(3)
    with pytest.raises(ValueError):
        OperatorMatrix([[1, 2], [3, 4], [5, 6]])
