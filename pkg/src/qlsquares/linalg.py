"""Exact vectors over Q(i, sqrt2): inner products, Gram checks, phase classes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, NotOrthogonal, NotUnit, ZeroVector
from .scalar import INV_SQRT2, ONE, ZERO, Scalar, format_scalar

__all__ = [
    "StateVec",
    "PhaseKey",
    "GramReport",
    "basis_vector",
    "inner_product",
    "is_orthonormal_set",
    "hadamard_rotate",
    "phase_equivalent",
    "phase_key",
]


class StateVec:
    """Immutable vector of :class:`Scalar` entries."""

    __slots__ = ("entries", "support", "_hash")

    def __init__(self, entries: Iterable):
        ents = tuple(e if isinstance(e, Scalar) else Scalar(e) for e in entries)
        if not ents:
            raise DimensionMismatch("a vector needs at least one coordinate")
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "support", tuple(k for k, e in enumerate(ents) if not e.is_zero()))
        object.__setattr__(self, "_hash", hash(ents))

    def __setattr__(self, name, value):
        raise AttributeError("StateVec is immutable")

    def __reduce__(self):
        return (StateVec, (self.entries,))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> Scalar:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, StateVec):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "StateVec([" + ", ".join(format_scalar(e) for e in self.entries) + "])"

    def _check(self, other: "StateVec") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other: "StateVec") -> "StateVec":
        self._check(other)
        return StateVec(x + y for x, y in zip(self.entries, other.entries))

    def __sub__(self, other: "StateVec") -> "StateVec":
        self._check(other)
        return StateVec(x - y for x, y in zip(self.entries, other.entries))

    def __neg__(self) -> "StateVec":
        return StateVec(-x for x in self.entries)

    def scale(self, lam) -> "StateVec":
        return StateVec(lam * x for x in self.entries)

    __rmul__ = scale

    def norm_sq(self) -> Scalar:
        return inner_product(self, self)

    def is_unit(self) -> bool:
        return self.norm_sq() == ONE

    def to_complex(self) -> list[complex]:
        return [complex(e) for e in self.entries]


def basis_vector(n: int, k: int) -> StateVec:
    """Computational basis vector e_k of C^n."""
    if not 0 <= k < n:
        raise IndexOutOfRange(f"basis index {k} outside 0..{n - 1}")
    return StateVec(ONE if i == k else ZERO for i in range(n))


def inner_product(u: StateVec, v: StateVec) -> Scalar:
    """<u|v>, conjugate-linear in ``u``."""
    if u.dim != v.dim:
        raise DimensionMismatch(f"dimensions {u.dim} and {v.dim} differ")
    ue, ve = u.entries, v.entries
    acc = ZERO
    vs = v.support
    for k in u.support:
        if k in vs:
            acc = acc + ue[k].conj() * ve[k]
    return acc


@dataclass(frozen=True)
class GramReport:
    ok: bool
    size: int
    dim: int
    pair: tuple[int, int] | None = None
    value: Scalar | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_orthonormal_set(vs: Sequence[StateVec]) -> GramReport:
    """Check <v_i, v_j> = delta_ij pairwise and that there are exactly dim vectors.

    Pairs are scanned in lexicographic order ``(i, j)`` with ``i <= j``, so the
    reported failure is the first one in that order. The size check runs last.
    """
    vs = list(vs)
    if not vs:
        raise DimensionMismatch("empty vector set")
    dim = vs[0].dim
    for v in vs:
        if v.dim != dim:
            raise DimensionMismatch(f"dimensions {dim} and {v.dim} differ")
    for i, u in enumerate(vs):
        for j in range(i, len(vs)):
            val = inner_product(u, vs[j])
            if val != (ONE if i == j else ZERO):
                reason = "not unit" if i == j else "not orthogonal"
                return GramReport(False, len(vs), dim, (i, j), val, reason)
    if len(vs) != dim:
        return GramReport(False, len(vs), dim, reason=f"{len(vs)} vectors in dimension {dim}")
    return GramReport(True, len(vs), dim)


def hadamard_rotate(u: StateVec, v: StateVec) -> tuple[StateVec, StateVec]:
    """Map an orthonormal pair (u, v) to ((u+v)/sqrt2, (u-v)/sqrt2)."""
    if u.dim != v.dim:
        raise DimensionMismatch(f"dimensions {u.dim} and {v.dim} differ")
    if not u.is_unit() or not v.is_unit():
        raise NotUnit("hadamard_rotate needs unit vectors")
    if not inner_product(u, v).is_zero():
        raise NotOrthogonal("hadamard_rotate needs orthogonal vectors")
    return (u + v).scale(INV_SQRT2), (u - v).scale(INV_SQRT2)


@dataclass(frozen=True)
class PhaseKey:
    """Canonical representative of a phase class: the vector divided by its first nonzero entry.

    Not a state (generally not unit norm), only a dictionary key.
    """

    pivot: int
    ratios: tuple[Scalar, ...]

    def text(self) -> str:
        return ",".join(format_scalar(r) for r in self.ratios)

    def __str__(self) -> str:
        return "[" + self.text() + "]"


def phase_key(u: StateVec) -> PhaseKey:
    if not u.support:
        raise ZeroVector("zero vector has no phase class")
    pivot = u.support[0]
    p = u.entries[pivot]
    if p == ONE:
        return PhaseKey(pivot, u.entries)
    pinv = p.inv()
    return PhaseKey(pivot, tuple(e * pinv if not e.is_zero() else ZERO for e in u.entries))


def phase_equivalent(u: StateVec, v: StateVec) -> bool:
    """True iff u = lambda*v for a unit-modulus lambda (for unit vectors: proportionality)."""
    if u.dim != v.dim:
        raise DimensionMismatch(f"dimensions {u.dim} and {v.dim} differ")
    if not u.is_unit() or not v.is_unit():
        raise NotUnit("phase_equivalent needs unit vectors")
    if u.support != v.support:
        return False
    k = u.support[0]
    lam = u.entries[k] / v.entries[k]
    return all(u.entries[j] == lam * v.entries[j] for j in u.support)
