"""Quantum Latin squares: the array type, the row/column verifier, cardinality and
coordinate decompositions of lines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, NotUnit
from .linalg import GramReport, PhaseKey, StateVec, is_orthonormal_set, phase_key
from .scalar import INV_SQRT2, ONE

__all__ = [
    "QLSquare",
    "LineResult",
    "VerificationReport",
    "PhaseClass",
    "CardinalityReport",
    "Block",
    "LineDecomposition",
    "verify",
    "cardinality",
    "is_classical",
    "line_decomposition",
]


class QLSquare:
    """An n x n array of unit vectors in C^n, indexed ``q[i, j]`` (row-major, 0-based).

    Unit norms and dimensions are checked here; row/column orthonormality is
    checked by :func:`verify`.
    """

    __slots__ = ("n", "grid")

    def __init__(self, grid: Sequence[Sequence[StateVec]]):
        rows = tuple(tuple(r) for r in grid)
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("empty square")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch(f"row {i} has {len(row)} cells, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, StateVec):
                    raise TypeError(f"cell {(i, j)} is not a StateVec")
                if v.dim != n:
                    raise DimensionMismatch(f"cell {(i, j)} has dimension {v.dim}, expected {n}")
                if v.norm_sq() != ONE:
                    raise NotUnit(f"norm squared {v.norm_sq()}", cell=(i, j))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "grid", rows)

    def __setattr__(self, name, value):
        raise AttributeError("QLSquare is immutable")

    def __reduce__(self):
        return (QLSquare, (self.grid,))

    def __getitem__(self, ij: tuple[int, int]) -> StateVec:
        i, j = ij
        return self.grid[i][j]

    def __eq__(self, other):
        if not isinstance(other, QLSquare):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self) -> int:
        return hash(self.grid)

    def __repr__(self) -> str:
        return f"QLSquare(n={self.n})"

    def row(self, i: int) -> tuple[StateVec, ...]:
        return self.grid[i]

    def col(self, j: int) -> tuple[StateVec, ...]:
        return tuple(r[j] for r in self.grid)

    def lines(self):
        """Yield ("row", i, vectors) for every row, then ("col", j, vectors)."""
        for i in range(self.n):
            yield "row", i, self.row(i)
        for j in range(self.n):
            yield "col", j, self.col(j)

    def cells(self):
        for i, row in enumerate(self.grid):
            for j, v in enumerate(row):
                yield (i, j), v

    def replace(self, ij: tuple[int, int], v: StateVec) -> "QLSquare":
        i, j = ij
        rows = [list(r) for r in self.grid]
        rows[i][j] = v
        return QLSquare(rows)

    def permute(self, row_perm: Sequence[int] | None = None,
                col_perm: Sequence[int] | None = None) -> "QLSquare":
        """New square with ``out[i, j] = self[row_perm[i], col_perm[j]]``."""
        rp = list(range(self.n)) if row_perm is None else list(row_perm)
        cp = list(range(self.n)) if col_perm is None else list(col_perm)
        if sorted(rp) != list(range(self.n)) or sorted(cp) != list(range(self.n)):
            raise ValueError("not a permutation")
        return QLSquare([[self.grid[rp[i]][cp[j]] for j in range(self.n)] for i in range(self.n)])

    def map_vectors(self, f) -> "QLSquare":
        return QLSquare([[f(v) for v in row] for row in self.grid])


@dataclass(frozen=True)
class LineResult:
    kind: str  # "row" or "col"
    index: int
    report: GramReport

    @property
    def ok(self) -> bool:
        return self.report.ok


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    line_results: tuple[LineResult, ...]

    def __bool__(self) -> bool:
        return self.valid

    @property
    def first_failure(self) -> LineResult | None:
        return next((r for r in self.line_results if not r.ok), None)

    def summary(self) -> str:
        lines = []
        for r in self.line_results:
            if r.ok:
                lines.append(f"{r.kind} {r.index}: ok")
            elif r.report.pair is not None:
                lines.append(f"{r.kind} {r.index}: FAIL pair {r.report.pair} "
                             f"inner product {r.report.value} ({r.report.reason})")
            else:
                lines.append(f"{r.kind} {r.index}: FAIL {r.report.reason}")
        lines.append("valid" if self.valid else "INVALID")
        return "\n".join(lines)


def verify(q: QLSquare) -> VerificationReport:
    """Check every row, then every column, for orthonormality."""
    results = tuple(LineResult(kind, idx, is_orthonormal_set(vs)) for kind, idx, vs in q.lines())
    return VerificationReport(all(r.ok for r in results), results)


@dataclass(frozen=True)
class PhaseClass:
    key: PhaseKey
    representative: StateVec
    cells: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CardinalityReport:
    cardinality: int
    classes: tuple[PhaseClass, ...]

    def __int__(self) -> int:
        return self.cardinality


def cardinality(q: QLSquare) -> CardinalityReport:
    """Group the n^2 cells by phase class; classes are listed in order of first occurrence."""
    keys: dict[PhaseKey, list] = {}
    memo: dict[StateVec, PhaseKey] = {}
    for ij, v in q.cells():
        k = memo.get(v)
        if k is None:
            k = memo[v] = phase_key(v)
        slot = keys.get(k)
        if slot is None:
            keys[k] = [v, [ij]]
        else:
            slot[1].append(ij)
    classes = tuple(PhaseClass(k, rep, tuple(cells)) for k, (rep, cells) in keys.items())
    return CardinalityReport(len(classes), classes)


def is_classical(q: QLSquare) -> list[list[int]] | None:
    """Symbol array L with q[i, j] ~ e_{L[i][j]} if every entry is a phased basis vector."""
    out = []
    for row in q.grid:
        syms = []
        for v in row:
            if len(v.support) != 1:
                return None
            syms.append(v.support[0])
        out.append(syms)
    return out


@dataclass(frozen=True)
class Block:
    kind: str  # "pair", "singleton" or "other"
    coords: tuple[int, ...]
    members: tuple[int, ...] = field(default=(), compare=False)

    def __str__(self) -> str:
        if self.kind == "pair":
            return "(" + "".join(str(c) for c in self.coords) + ")"
        if self.kind == "singleton":
            return "{" + str(self.coords[0]) + "}"
        return "<" + ",".join(str(c) for c in self.coords) + ">"


@dataclass(frozen=True)
class LineDecomposition:
    """Disjoint coordinate blocks of a line.

    Order: pair blocks by first appearance along the line, then singletons by
    coordinate, then anything else by first appearance.
    """

    blocks: tuple[Block, ...]

    def __str__(self) -> str:
        return "∪".join(str(b) for b in self.blocks)

    @property
    def covered(self) -> set[int]:
        return {c for b in self.blocks for c in b.coords}


def _is_hadamard_pair(u: StateVec, v: StateVec, i: int, j: int) -> bool:
    # {u, v} equal {p_ij, q_ij} up to phase: after fixing the phase on coordinate i,
    # one must carry +1/sqrt2 and the other -1/sqrt2 on j
    ratios = set()
    for w in (u, v):
        wi, wj = w.entries[i], w.entries[j]
        if wi.norm_sq() != wj.norm_sq():
            return False
        ratios.add(wj / wi)
    if ratios != {ONE, -ONE}:
        return False
    return all(w.entries[i].norm_sq() == INV_SQRT2 * INV_SQRT2 for w in (u, v))


def line_decomposition(line: Sequence[StateVec]) -> LineDecomposition:
    """Split a line into connected components of overlapping supports and tag them."""
    line = list(line)
    if not line:
        return LineDecomposition(())
    dim = line[0].dim
    for v in line:
        if v.dim != dim:
            raise DimensionMismatch(f"dimensions {dim} and {v.dim} differ")
    # union-find over coordinates, seeded by each vector's support
    parent = list(range(dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in line:
        s = v.support
        for k in s[1:]:
            ra, rb = find(s[0]), find(k)
            if ra != rb:
                parent[rb] = ra
    comps: dict[int, list[int]] = {}
    for idx, v in enumerate(line):
        if v.support:
            comps.setdefault(find(v.support[0]), []).append(idx)

    pairs, singles, others = [], [], []
    for members in comps.values():
        coords = tuple(sorted({c for m in members for c in line[m].support}))
        mem = tuple(members)
        if len(coords) == 1 and len(members) == 1:
            singles.append(Block("singleton", coords, mem))
        elif (len(coords) == 2 and len(members) == 2
              and _is_hadamard_pair(line[members[0]], line[members[1]], *coords)):
            pairs.append(Block("pair", coords, mem))
        else:
            others.append(Block("other", coords, mem))
    singles.sort(key=lambda b: b.coords)
    return LineDecomposition(tuple(pairs + singles + others))
