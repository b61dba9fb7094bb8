"""The clock-and-shift operator algebra on a d-dimensional space.

The phased shift v_a sends |k> to q^(ka) |k-1 mod d| with q = exp(2*pi*i/d).
Its a = 0 member is the plain cyclic shift X, and Z = X^dagger v_1 is the
clock operator diag(1, q, ..., q^(d-1)). Together with the diagonal of
ladder coefficients sqrt((d-1-k)(k+1)) these realize the su(2) ladder
operators in polar form: raising = modulus * shift.

Exact identities (Weyl relations, cyclicity, the ladder commutator) are
verified in rational arithmetic; the remaining su(2) commutators involve
square roots and are checked in floating point against a tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .cyclotomic import Cyclotomic, root_of_unity
from .states import StateVector

__all__ = [
    "OperatorMatrix",
    "RadicalDiagonal",
    "CheckResult",
    "VerificationReport",
    "phased_shift_matrix",
    "shift_matrix",
    "clock_matrix",
    "ladder_modulus",
    "eigenvalue_of",
    "weyl_report",
    "su2_report",
]

ScalarLike = Union[Cyclotomic, int, Fraction]


def _as_scalar(value: ScalarLike) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value)


class OperatorMatrix:
    """A dense square matrix of exact scalars.

    The column index labels the input basis vector: column k of the matrix
    is the image of |k>.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Sequence[Sequence[ScalarLike]]) -> None:
        self.rows: tuple[tuple[Cyclotomic, ...], ...] = tuple(
            tuple(_as_scalar(e) for e in row) for row in rows
        )
        self.dim = len(self.rows)
        if self.dim == 0 or any(len(row) != self.dim for row in self.rows):
            raise ValueError("operator matrices must be square and nonempty")

    @classmethod
    def identity(cls, dim: int) -> "OperatorMatrix":
        one = Cyclotomic.one()
        zero = Cyclotomic.zero()
        return cls([[one if r == c else zero for c in range(dim)] for r in range(dim)])

    def entry(self, row: int, col: int) -> Cyclotomic:
        return self.rows[row][col]

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        d = self.dim
        out = []
        for r in range(d):
            arow = self.rows[r]
            acc = [Cyclotomic.zero() for _ in range(d)]
            for k in range(d):
                a = arow[k]
                if not a:
                    continue
                brow = other.rows[k]
                for c in range(d):
                    b = brow[c]
                    if b:
                        acc[c] = acc[c] + a * b
            out.append(acc)
        return OperatorMatrix(out)

    def __mul__(self, scalar: ScalarLike) -> "OperatorMatrix":
        c = _as_scalar(scalar)
        return OperatorMatrix([[c * e for e in row] for row in self.rows])

    __rmul__ = __mul__

    def __neg__(self) -> "OperatorMatrix":
        return self * Fraction(-1)

    def __pow__(self, exponent: int) -> "OperatorMatrix":
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = OperatorMatrix.identity(self.dim)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def adjoint(self) -> "OperatorMatrix":
        d = self.dim
        return OperatorMatrix(
            [[self.rows[c][r].conjugate() for c in range(d)] for r in range(d)]
        )

    def apply(self, state: StateVector) -> StateVector:
        """Matrix action on a ket; the state's scale_sq is unchanged."""
        if state.dim != self.dim:
            raise ValueError("dimension mismatch")
        entries = []
        for row in self.rows:
            acc = Cyclotomic.zero()
            for coeff, amp in zip(row, state.entries):
                if coeff and amp:
                    acc = acc + coeff * amp
            entries.append(acc)
        return StateVector(entries, state.scale_sq)

    def kron(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """Kronecker product matching the row-major state tensor ordering."""
        d1, d2 = self.dim, other.dim
        out = []
        for r1 in range(d1):
            for r2 in range(d2):
                out.append(
                    [
                        self.rows[r1][c1] * other.rows[r2][c2]
                        for c1 in range(d1)
                        for c2 in range(d2)
                    ]
                )
        return OperatorMatrix(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for arow, brow in zip(self.rows, other.rows) for a, b in zip(arow, brow)
        )

    __hash__ = None  # type: ignore[assignment]

    def is_identity(self) -> bool:
        return self == OperatorMatrix.identity(self.dim)

    def is_unitary(self) -> bool:
        return (self.adjoint() @ self).is_identity()

    def as_complex_array(self) -> np.ndarray:
        return np.array(
            [[e.as_complex() for e in row] for row in self.rows], dtype=complex
        )

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rows": [[e.to_text() for e in row] for row in self.rows],
        }

    def __repr__(self) -> str:
        return f"OperatorMatrix(dim={self.dim})"


@dataclass(frozen=True)
class RadicalDiagonal:
    """diag(sqrt(n_k)) for nonnegative integers n_k, kept exact via n_k."""

    radicands: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(n < 0 for n in self.radicands):
            raise ValueError("radicands must be nonnegative")

    @property
    def dim(self) -> int:
        return len(self.radicands)

    def squared(self) -> tuple[int, ...]:
        """The exact integer diagonal of the square."""
        return self.radicands

    def as_float_array(self) -> np.ndarray:
        return np.diag([math.sqrt(n) for n in self.radicands])


def phased_shift_matrix(dim: int, a: int) -> OperatorMatrix:
    """The unitary sending |k> to q^(ka) |k-1 mod d>, q = exp(2*pi*i/d).

    Column k holds q^(ka) in row k-1 mod d; the top superdiagonal carries
    q^a, q^(2a), ... and the bottom-left corner is 1.
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if not 0 <= a < dim:
        raise ValueError(f"a must lie in 0..{dim - 1}")
    zero = Cyclotomic.zero()
    rows = [[zero] * dim for _ in range(dim)]
    for k in range(dim):
        rows[(k - 1) % dim][k] = root_of_unity(dim, k * a)
    return OperatorMatrix(rows)


def shift_matrix(dim: int) -> OperatorMatrix:
    """The cyclic shift X = the a = 0 phased shift."""
    return phased_shift_matrix(dim, 0)


def clock_matrix(dim: int) -> OperatorMatrix:
    """The clock operator Z = diag(1, q, ..., q^(d-1))."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    zero = Cyclotomic.zero()
    rows = [[zero] * dim for _ in range(dim)]
    for k in range(dim):
        rows[k][k] = root_of_unity(dim, k)
    return OperatorMatrix(rows)


def ladder_modulus(dim: int) -> RadicalDiagonal:
    """diag(sqrt((d-1-k)(k+1))), the Hermitian modulus of the ladder polar form.

    The last radicand is always 0, which kills the wrap-around column of
    modulus * shift.
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    return RadicalDiagonal(tuple((dim - 1 - k) * (k + 1) for k in range(dim)))


def eigenvalue_of(matrix: OperatorMatrix, state: StateVector) -> Cyclotomic | None:
    """The exact eigenvalue when state is an eigenvector of matrix, else None.

    The candidate is read off the first nonzero amplitude, using
    conj(amp)/|amp|^2 in place of 1/amp, and then confirmed entrywise.
    """
    image = matrix.apply(state)
    for k, amp in enumerate(state.entries):
        if amp:
            mag = amp.magnitude_squared().as_rational()
            if mag is None or mag == 0:
                return None
            candidate = image.entries[k] * amp.conjugate() * (1 / mag)
            return candidate if image == state * candidate else None
    return None


@dataclass(frozen=True)
class CheckResult:
    """One verified identity: exact checks have no residual, float ones do."""

    check: str
    exact: bool
    passed: bool
    max_residual: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "exact": self.exact,
            "passed": self.passed,
            "max_residual": self.max_residual,
        }


@dataclass(frozen=True)
class VerificationReport:
    """A named bundle of check results for one dimension."""

    name: str
    dim: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "passed": self.passed,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def weyl_report(dim: int) -> VerificationReport:
    """Exact verification of the clock-and-shift relations in dimension d.

    Checks, all in exact arithmetic:
      * v_a = X Z^a for every a,
      * X^d = Z^d = 1,
      * X Z = q Z X,
      * (-1)^((d-1)a) v_a^d = 1 for every a (cyclicity up to a sign).
    Failures indicate an implementation bug, so they are reported rather
    than raised.
    """
    x = shift_matrix(dim)
    z = clock_matrix(dim)
    q = root_of_unity(dim, 1)
    identity = OperatorMatrix.identity(dim)
    checks: list[CheckResult] = []

    checks.append(
        CheckResult("shift_power_d_is_identity", True, (x ** dim).is_identity())
    )
    checks.append(
        CheckResult("clock_power_d_is_identity", True, (z ** dim).is_identity())
    )
    checks.append(
        CheckResult("shift_clock_commutation", True, x @ z == (z @ x) * q)
    )

    z_power = identity
    for a in range(dim):
        v = phased_shift_matrix(dim, a)
        checks.append(
            CheckResult(
                f"phased_shift_is_shift_times_clock_power[a={a}]",
                True,
                v == x @ z_power,
            )
        )
        sign = -1 if ((dim - 1) * a) % 2 else 1
        checks.append(
            CheckResult(
                f"cyclicity_up_to_sign[a={a}]",
                True,
                ((v ** dim) * Fraction(sign)).is_identity(),
            )
        )
        z_power = z_power @ z
    return VerificationReport("weyl", dim, tuple(checks))


def su2_report(dim: int, a: int, tol: float = 1e-12) -> VerificationReport:
    """Verification of the su(2) ladder algebra built from the polar form.

    With n_k = (d-1-k)(k+1) the identity
        modulus^2 - shift^dagger modulus^2 shift = diag(d-1-2k)
    is checked exactly over the integers: conjugating the diagonal by the
    phased shift permutes it cyclically and the phases cancel, so the left
    side is diag(n_k - n_(k-1 mod d)). The value d-1-2k is twice the m
    eigenvalue j - k. The remaining commutators [jz, j+-] = +-j+- involve
    the square roots themselves and are checked in floating point within
    tol, with jz in the diagonal form the exact check just established
    (half-integers are exact in floats, so no matrix-product noise enters
    through jz itself).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not 0 <= a < dim:
        raise ValueError(f"a must lie in 0..{dim - 1}")
    n = ladder_modulus(dim).squared()
    exact_ok = all(n[k] - n[(k - 1) % dim] == dim - 1 - 2 * k for k in range(dim))
    checks = [CheckResult("ladder_commutator_exact", True, exact_ok)]

    h = np.diag([math.sqrt(v) for v in n])
    v = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        v[(k - 1) % dim, k] = cmath.exp(2j * math.pi * k * a / dim)
    j_plus = h @ v
    j_minus = v.conj().T @ h
    if exact_ok:
        m = np.array([(dim - 1 - 2 * k) / 2 for k in range(dim)])
    else:
        j_z = 0.5 * (h @ h - v.conj().T @ (h @ h) @ v)
        m = None

    def commutator_with_jz(matrix: np.ndarray) -> np.ndarray:
        if m is not None:
            return m[:, None] * matrix - matrix * m[None, :]
        return j_z @ matrix - matrix @ j_z

    raise_res = float(np.max(np.abs(commutator_with_jz(j_plus) - j_plus)))
    lower_res = float(np.max(np.abs(commutator_with_jz(j_minus) + j_minus)))
    checks.append(
        CheckResult("jz_raises_jplus_float", False, raise_res <= tol, raise_res)
    )
    checks.append(
        CheckResult("jz_lowers_jminus_float", False, lower_res <= tol, lower_res)
    )
    return VerificationReport(f"su2[a={a}]", dim, tuple(checks))
