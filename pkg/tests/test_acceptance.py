"""End-to-end acceptance suite.

One test per criterion; each runs the full exact verification at its stated
tolerance (exact equality unless noted), checks the stated wall-clock
budget, and prints one summary line. Run with ``pytest -s`` to see the
lines as they pass.
"""

import time
from fractions import Fraction

import numpy as np

from quditbases import (
    certify_unbiased,
    classify_basis,
    clock_matrix,
    computational_basis,
    eigen_check,
    enumerate_group,
    ket,
    mub_basis,
    mub_set,
    pauli_compose,
    pauli_matrix,
    phased_shift_matrix,
    root_of_unity,
    su2_report,
    two_qubit_mub_set,
    weyl_report,
)
from quditbases.pauli import PauliElement

from tables import (
    QUBIT_EIGENBASES,
    QUBIT_SCALE,
    QUTRIT_EIGENBASES,
    QUTRIT_SCALE,
    TWO_QUBIT_BASES,
    TWO_QUBIT_SCALE,
)


class Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"{self.name} took {elapsed:.2f}s, budget {self.seconds}s"
            )
            print(f"PASS {self.name} ({elapsed:.2f}s)")
        return False


def assert_table(basis, columns, scale):
    for vec, column in zip(basis.vectors, columns):
        assert vec.scale_sq == scale
        for entry, expected in zip(vec.entries, column):
            assert entry == expected


def test_criterion_1_qubit_tables():
    with Budget("criterion 1: qubit tables and Pauli identification", 1.0):
        assert_table(mub_basis(2, 0), QUBIT_EIGENBASES[0], QUBIT_SCALE)
        assert_table(mub_basis(2, 1), QUBIT_EIGENBASES[1], QUBIT_SCALE)
        sigma_x = [[0, 1], [1, 0]]
        minus_i_sigma_y = [[0, -1], [1, 0]]
        sigma_z = [[1, 0], [0, -1]]
        for matrix, expected in (
            (phased_shift_matrix(2, 0), sigma_x),
            (phased_shift_matrix(2, 1), minus_i_sigma_y),
            (clock_matrix(2), sigma_z),
        ):
            assert [[e.as_rational() for e in row] for row in matrix.rows] == expected


def test_criterion_2_qutrit_tables():
    with Budget("criterion 2: qutrit tables and their four-MUB certificate", 1.0):
        basis_3 = computational_basis(3)
        assert all(basis_3[k] == ket(3, k) for k in range(3))
        bases = [basis_3]
        for a in range(3):
            basis = mub_basis(3, a)
            assert_table(basis, QUTRIT_EIGENBASES[a], QUTRIT_SCALE)
            bases.append(basis)
        certificate = certify_unbiased(bases)
        assert len(certificate.basis_labels) == 4
        assert certificate.all_unbiased
        assert certificate.maximal


def test_criterion_3_two_qubit_tables():
    with Budget("criterion 3: the twenty two-qubit columns and their certificate", 1.0):
        bases, certificate = two_qubit_mub_set()
        assert [b.label for b in bases] == ["B_4", "w_00", "w_11", "w_01", "w_10"]
        for k in range(4):
            assert bases[0][k] == ket(4, k)
        for basis in bases[1:]:
            assert_table(basis, TWO_QUBIT_BASES[basis.label], TWO_QUBIT_SCALE)
        assert len(certificate.basis_labels) == 5
        assert certificate.maximal


def test_criterion_4_prime_maximality():
    with Budget("criterion 4: maximal MUB families for p in {2,3,5,7,11,13}", 30.0):
        for p in (2, 3, 5, 7, 11, 13):
            bases, certificate = mub_set(p)
            assert len(bases) == p + 1
            assert certificate.maximal, p
            target = Fraction(1, p)
            if p <= 7:
                # exhaustive direct re-check of every cross overlap
                for i in range(len(bases)):
                    for j in range(i + 1, len(bases)):
                        for u in bases[i]:
                            for v in bases[j]:
                                assert u.overlap_squared(v) == target


def test_criterion_5_three_mubs_in_every_dimension():
    with Budget("criterion 5: three MUBs for every d in 2..12", 10.0):
        for dim in range(2, 13):
            bases = [computational_basis(dim), mub_basis(dim, 0), mub_basis(dim, 1)]
            certificate = certify_unbiased(bases)
            assert certificate.all_unbiased, dim


def test_criterion_6_composite_failure_witness():
    with Budget("criterion 6: dimension-four failure witness", 1.0):
        bases = [mub_basis(4, a) for a in range(4)]
        bases.append(computational_basis(4))
        certificate = certify_unbiased(bases)
        failed = [p for p in certificate.pairs if p.verdict == "failed"]
        assert failed
        witness = failed[0].witness
        assert witness is not None
        assert witness.overlap_sq is not None
        assert witness.overlap_sq != Fraction(1, 4)


def test_criterion_7_weyl_relations():
    with Budget("criterion 7: Weyl relations for all d <= 12", 5.0):
        for dim in range(1, 13):
            report = weyl_report(dim)
            assert report.passed, dim
            assert len(report.checks) == 3 + 2 * dim


def test_criterion_8_su2_polar_decomposition():
    with Budget("criterion 8: su(2) ladder identities for all d <= 50", 30.0):
        for dim in range(1, 51):
            for a in range(dim):
                report = su2_report(dim, a, 1e-12)
                assert report.passed, (dim, a)
                for check in report.checks:
                    if not check.exact:
                        assert check.max_residual <= 1e-12


def test_criterion_9_pauli_group():
    with Budget("criterion 9: Pauli group enumeration for d in 2..7", 60.0):
        for dim in range(2, 8):
            report = enumerate_group(dim)
            assert report.order == dim ** 3
            assert report.passed, dim
            if dim <= 4:
                assert report.sampled_pairs == dim ** 6
        # spot re-check of the symbolic law against the matrix oracle
        for dim in (2, 3):
            elements = [
                PauliElement(a, b, c)
                for a in range(dim)
                for b in range(dim)
                for c in range(dim)
            ]
            for p in elements:
                for q in elements:
                    assert pauli_matrix(dim, p) @ pauli_matrix(dim, q) == pauli_matrix(
                        dim, pauli_compose(dim, p, q)
                    )


def test_criterion_10_entanglement_classification():
    with Budget("criterion 10: determinant classes of the two-qubit bases", 1.0):
        bases, _ = two_qubit_mub_set()
        expected = {
            "B_4": "all-none",
            "w_00": "all-none",
            "w_11": "all-none",
            "w_01": "all-maximal",
            "w_10": "all-maximal",
        }
        for basis in bases:
            classification = classify_basis(basis, 2)
            assert classification.summary == expected[basis.label]
            for result in classification.results:
                if expected[basis.label] == "all-maximal":
                    assert result.det_abs_sq == Fraction(1, 4)
                else:
                    assert result.det_abs_sq == 0


def test_criterion_10_bound_sweep():
    with Budget("criterion 10 sweep: |det A| bound on random unit vectors", 10.0):
        rng = np.random.default_rng(2024)
        for d in (2, 3):
            samples = rng.normal(size=(10_000, d * d)) + 1j * rng.normal(
                size=(10_000, d * d)
            )
            samples /= np.linalg.norm(samples, axis=1, keepdims=True)
            dets = np.abs(np.linalg.det(samples.reshape(-1, d, d)))
            assert np.all(dets <= d ** (-d / 2) + 1e-9)


def test_criterion_11_eigenstructure():
    with Budget("criterion 11: eigenvalue equation for all (d <= 12, a, alpha)", 10.0):
        for dim in range(1, 13):
            for a in range(dim):
                seen = []
                for alpha in range(dim):
                    result = eigen_check(dim, a, alpha)
                    assert result.passed, (dim, a, alpha)
                    expected = root_of_unity(2 * dim, (dim - 1) * a - 2 * alpha)
                    assert result.eigenvalue == expected
                    assert all(result.eigenvalue != other for other in seen)
                    seen.append(result.eigenvalue)
