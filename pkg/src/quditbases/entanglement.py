"""A determinant measure of global entanglement for two-qudit states.

Writing a unit vector of the d*d-dimensional product space as
sum_kl A[k][l] |k> tensor |l>, the coefficient matrix satisfies
0 <= |det A| <= 1/sqrt(d^d). Determinant zero is the absence of global
entanglement in this measure's sense (for d > 2 that is weaker than
separability), and the upper bound is attained exactly by the maximally
entangled states. The primitive here is |det A|^2, which is rational for
every state in scope, so the classification is an exact trichotomy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .states import Basis, StateVector

__all__ = [
    "coefficient_matrix",
    "global_tangle",
    "classify_basis",
    "TangleResult",
    "BasisClassification",
    "NO_TANGLE",
    "MAXIMAL",
    "INTERMEDIATE",
]

NO_TANGLE = "none"
MAXIMAL = "maximal"
INTERMEDIATE = "intermediate"


def coefficient_matrix(state: StateVector, factor_dim: int) -> tuple[tuple[Cyclotomic, ...], ...]:
    """The d x d coefficient view A[k][l] = entry at index k*d + l.

    The physical amplitudes are sqrt(state.scale_sq) times the returned
    entries; the flattening matches the row-major tensor convention.
    """
    if factor_dim < 1:
        raise ValueError("factor dimension must be >= 1")
    if state.dim != factor_dim * factor_dim:
        raise ValueError(
            f"state dimension {state.dim} is not the square of {factor_dim}"
        )
    if state.norm_squared() != 1:
        raise ValueError("coefficient matrix is defined for unit vectors")
    d = factor_dim
    return tuple(tuple(state.entries[k * d + l] for l in range(d)) for k in range(d))


def _determinant(rows: tuple[tuple[Cyclotomic, ...], ...]) -> Cyclotomic:
    # cofactor expansion along the first row; fine for the tiny sizes here
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = Cyclotomic.zero()
    for col, pivot in enumerate(rows[0]):
        if not pivot:
            continue
        minor = tuple(
            tuple(row[c] for c in range(size) if c != col) for row in rows[1:]
        )
        term = pivot * _determinant(minor)
        total = total + (term if col % 2 == 0 else -term)
    return total


@dataclass(frozen=True)
class TangleResult:
    """|det A|^2 with its exact classification."""

    det_abs_sq: Fraction | None  # None when the exact value is irrational
    det_abs_float: float
    classification: str

    def to_json_dict(self) -> dict:
        return {
            "det_abs_sq": None if self.det_abs_sq is None else str(self.det_abs_sq),
            "det_abs_float": self.det_abs_float,
            "class": self.classification,
        }


def global_tangle(state: StateVector, factor_dim: int) -> TangleResult:
    """Exact |det A|^2 of the coefficient matrix and its classification.

    Classes: ``none`` when det A = 0 (no global entanglement in the
    determinant sense), ``maximal`` when |det A|^2 = d^-d exactly, and
    ``intermediate`` otherwise. A value above the d^-d bound would mean an
    arithmetic bug and raises.
    """
    rows = coefficient_matrix(state, factor_dim)
    det = _determinant(rows)
    scale_power = state.scale_sq ** factor_dim
    bound = Fraction(1, factor_dim ** factor_dim)

    if det.is_zero():
        return TangleResult(Fraction(0), 0.0, NO_TANGLE)

    mag = det.magnitude_squared().as_rational()
    det_float = abs(det.as_complex()) * math.sqrt(float(scale_power))
    if mag is None:
        if det_float > math.sqrt(float(bound)) + 1e-9:
            raise RuntimeError("determinant bound violated; arithmetic bug")
        return TangleResult(None, det_float, INTERMEDIATE)

    det_abs_sq = scale_power * mag
    if det_abs_sq > bound:
        raise RuntimeError(
            f"determinant bound violated: |det A|^2 = {det_abs_sq} > {bound}"
        )
    classification = MAXIMAL if det_abs_sq == bound else INTERMEDIATE
    return TangleResult(det_abs_sq, det_float, classification)


@dataclass(frozen=True)
class BasisClassification:
    label: str
    results: tuple[TangleResult, ...]

    @property
    def summary(self) -> str:
        classes = {r.classification for r in self.results}
        if classes == {NO_TANGLE}:
            return "all-none"
        if classes == {MAXIMAL}:
            return "all-maximal"
        return "mixed"

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "summary": self.summary,
            "vectors": [r.to_json_dict() for r in self.results],
        }


def classify_basis(basis: Basis, factor_dim: int) -> BasisClassification:
    """Apply the determinant measure to every vector of a basis."""
    results = tuple(global_tangle(v, factor_dim) for v in basis.vectors)
    return BasisClassification(basis.label, results)
