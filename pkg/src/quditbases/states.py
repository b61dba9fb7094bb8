"""States, labels, bases and inner products of a d-dimensional Hilbert space.

Vectors carry exact cyclotomic entries together with an exact squared global
scale, so normalizations like 1/sqrt(d) never leave rational arithmetic.
Angular momentum labels |j, m> and computational labels |k> are related by
k = j - m with d = 2j + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .cyclotomic import Cyclotomic

__all__ = [
    "SpinLabel",
    "StateVector",
    "ScaledScalar",
    "Basis",
    "ket",
]

ScalarLike = Union[Cyclotomic, int, Fraction]


def _as_scalar(value: ScalarLike) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value)


@dataclass(frozen=True)
class SpinLabel:
    """An angular momentum label |j, m> stored as the integers 2j and 2m."""

    two_j: int
    two_m: int

    def __post_init__(self) -> None:
        if self.two_j < 0:
            raise ValueError("2j must be nonnegative")
        if (self.two_j - self.two_m) % 2:
            raise ValueError("2j and 2m must have the same parity")
        if abs(self.two_m) > self.two_j:
            raise ValueError("|m| must not exceed j")

    @classmethod
    def from_jm(cls, j: Union[int, Fraction], m: Union[int, Fraction]) -> "SpinLabel":
        j = Fraction(j)
        m = Fraction(m)
        two_j = 2 * j
        two_m = 2 * m
        if two_j.denominator != 1 or two_m.denominator != 1:
            raise ValueError("j and m must be integers or half-integers")
        return cls(int(two_j), int(two_m))

    @classmethod
    def from_index(cls, dim: int, k: int) -> "SpinLabel":
        """The label with k = j - m in the space of dimension d = 2j + 1."""
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        if not 0 <= k < dim:
            raise ValueError(f"k must lie in 0..{dim - 1}")
        two_j = dim - 1
        return cls(two_j, two_j - 2 * k)

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.two_m, 2)

    @property
    def k(self) -> int:
        return (self.two_j - self.two_m) // 2

    @property
    def dimension(self) -> int:
        return self.two_j + 1

    def to_index(self) -> tuple[int, int]:
        """The pair (d, k) of the computational label |k>."""
        return self.dimension, self.k


@dataclass(frozen=True)
class ScaledScalar:
    """An inner product sqrt(scale_sq) * value with the radical kept exact."""

    value: Cyclotomic
    scale_sq: Fraction

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def conjugate(self) -> "ScaledScalar":
        return ScaledScalar(self.value.conjugate(), self.scale_sq)

    def abs_squared(self) -> Fraction | None:
        """Exact |.|^2 when the cyclotomic part has rational magnitude."""
        mag = self.value.magnitude_squared().as_rational()
        if mag is None:
            return None
        return self.scale_sq * mag

    def as_complex(self) -> complex:
        return float(self.scale_sq) ** 0.5 * self.value.as_complex()


class StateVector:
    """A dim-d ket sqrt(scale_sq) * entries with exact cyclotomic entries.

    The squared norm must reduce to a rational; it is computed once at
    construction and cached. Comparison is entrywise on the stored
    representation; use :meth:`equals_up_to_global_phase` to ignore a
    unimodular global factor.
    """

    __slots__ = ("dim", "entries", "scale_sq", "_norm_sq", "_conj")

    def __init__(self, entries: Iterable[ScalarLike], scale_sq: Union[int, Fraction] = 1) -> None:
        self.entries: tuple[Cyclotomic, ...] = tuple(_as_scalar(e) for e in entries)
        if not self.entries:
            raise ValueError("a state needs at least one entry")
        self.dim = len(self.entries)
        self.scale_sq = Fraction(scale_sq)
        if self.scale_sq <= 0:
            raise ValueError("scale_sq must be positive")
        total = Cyclotomic.zero()
        for e in self.entries:
            total = total + e.magnitude_squared()
        rat = total.as_rational()
        if rat is None:
            raise ValueError("squared norm does not reduce to a rational")
        self._norm_sq: Fraction = self.scale_sq * rat
        self._conj: tuple[Cyclotomic, ...] | None = None

    def norm_squared(self) -> Fraction:
        return self._norm_sq

    def is_unit(self) -> bool:
        return self._norm_sq == 1

    def conjugated_entries(self) -> tuple[Cyclotomic, ...]:
        if self._conj is None:
            self._conj = tuple(e.conjugate() for e in self.entries)
        return self._conj

    def inner(self, other: "StateVector") -> ScaledScalar:
        """<self|other> with the irrational scale kept as an exact square."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        total = Cyclotomic.zero()
        for bra, entry in zip(self.conjugated_entries(), other.entries):
            if bra and entry:
                total = total + bra * entry
        return ScaledScalar(total, self.scale_sq * other.scale_sq)

    def overlap_squared(self, other: "StateVector") -> Fraction:
        """Exact |<self|other>|^2; raises if it is not rational."""
        mag = self.inner(other).abs_squared()
        if mag is None:
            raise ArithmeticError("squared overlap is not rational")
        return mag

    def tensor(self, other: "StateVector") -> "StateVector":
        """Kronecker product, row major with the first factor slowest."""
        entries = [u * v for u in self.entries for v in other.entries]
        return StateVector(entries, self.scale_sq * other.scale_sq)

    def __mul__(self, scalar: ScalarLike) -> "StateVector":
        c = _as_scalar(scalar)
        return StateVector([c * e for e in self.entries], self.scale_sq)

    __rmul__ = __mul__

    def __add__(self, other: "StateVector") -> "StateVector":
        if not isinstance(other, StateVector):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self.scale_sq != other.scale_sq:
            raise ValueError("can only add vectors with the same scale_sq")
        return StateVector(
            [a + b for a, b in zip(self.entries, other.entries)], self.scale_sq
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.scale_sq == other.scale_sq
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    __hash__ = None  # type: ignore[assignment]

    def equals_up_to_global_phase(self, other: "StateVector") -> bool:
        """Exact test for self = phase * other with |phase| = 1.

        Uses the Cauchy-Schwarz equality case: the vectors are collinear
        exactly when |<u|v>|^2 = <u|u><v|v>, and the factor is unimodular
        exactly when the norms agree.
        """
        if self.dim != other.dim:
            return False
        if self._norm_sq != other._norm_sq:
            return False
        if self._norm_sq == 0:
            return True
        overlap = self.inner(other).abs_squared()
        return overlap is not None and overlap == self._norm_sq * other._norm_sq

    def phase_normalized(self) -> "StateVector":
        """Rotate by a global phase so the first nonzero entry is |entry|^2.

        Requires that entry to be unimodular, which makes the result's
        leading entry exactly 1.
        """
        for e in self.entries:
            if e:
                if e.magnitude_squared().as_rational() != 1:
                    raise ValueError("leading entry is not unimodular")
                phase = e.conjugate()
                return self * phase
        return self

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "scale_sq": str(self.scale_sq),
            "entries": [e.to_text() for e in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "StateVector":
        entries = [Cyclotomic.from_text(t) for t in data["entries"]]
        vec = cls(entries, Fraction(data["scale_sq"]))
        if vec.dim != int(data["dim"]):
            raise ValueError("dim field does not match the entry count")
        return vec

    def __repr__(self) -> str:
        body = ", ".join(str(e) for e in self.entries)
        return f"StateVector([{body}], scale_sq={self.scale_sq})"


def ket(dim: int, k: int) -> StateVector:
    """The computational basis vector |k> of the d-dimensional space."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if not 0 <= k < dim:
        raise IndexError(f"k must lie in 0..{dim - 1}")
    entries = [Cyclotomic.one() if i == k else Cyclotomic.zero() for i in range(dim)]
    return StateVector(entries, Fraction(1))


class Basis:
    """An ordered set of dim vectors, verified exactly orthonormal."""

    __slots__ = ("dim", "label", "vectors", "tags")

    def __init__(
        self,
        label: str,
        vectors: Sequence[StateVector],
        tags: Sequence[str] | None = None,
    ) -> None:
        vectors = tuple(vectors)
        if not vectors:
            raise ValueError("a basis needs at least one vector")
        dim = vectors[0].dim
        if any(v.dim != dim for v in vectors):
            raise ValueError("all basis vectors must share one dimension")
        if len(vectors) != dim:
            raise ValueError(f"a basis of dimension {dim} needs {dim} vectors")
        for i, v in enumerate(vectors):
            if v.norm_squared() != 1:
                raise ValueError(
                    f"basis {label!r}: vector {i} has squared norm {v.norm_squared()}"
                )
        for i in range(dim):
            for j in range(i + 1, dim):
                if not vectors[i].inner(vectors[j]).is_zero():
                    raise ValueError(
                        f"basis {label!r}: vectors {i} and {j} are not orthogonal"
                    )
        self.dim = dim
        self.label = label
        self.vectors = vectors
        self.tags = tuple(tags) if tags is not None else None

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, index: int) -> StateVector:
        return self.vectors[index]

    def to_json_dict(self) -> dict:
        data = {
            "label": self.label,
            "dim": self.dim,
            "vectors": [v.to_json_dict() for v in self.vectors],
        }
        if self.tags is not None:
            data["tags"] = list(self.tags)
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "Basis":
        vectors = [StateVector.from_json_dict(v) for v in data["vectors"]]
        return cls(data["label"], vectors, data.get("tags"))

    def __repr__(self) -> str:
        return f"Basis({self.label!r}, dim={self.dim})"
