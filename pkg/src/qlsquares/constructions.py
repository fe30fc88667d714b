"""Exact builders for the three order-6 squares (cardinalities 13, 15, 17) and the
two mechanisms behind them: direct sums of block bases and coordinate-plane
Hadamard pairs."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import IndexOutOfRange, LayoutInvalid, NotLatin, NotStrictlyOrdered
from .linalg import StateVec, basis_vector, hadamard_rotate, is_orthonormal_set
from .square import QLSquare

__all__ = [
    "CoordinatePlanePair",
    "Phi13Alphabet",
    "DirectSumLayout",
    "hadamard_pair",
    "phi13_alphabet",
    "phi13_layout",
    "build_phi13",
    "build_phi15",
    "build_phi17",
    "build_direct_sum",
    "build_from_classical",
    "cyclic_latin_square",
    "pair_alphabet",
    "FIXTURES",
    "PHI15_PAIRS",
    "PHI15_SINGLES",
    "PHI17_PAIRS",
    "PHI17_SINGLES",
]


@dataclass(frozen=True)
class CoordinatePlanePair:
    """p = (e_i + e_j)/sqrt2 and q = (e_i - e_j)/sqrt2 for i < j."""

    i: int
    j: int
    p: StateVec
    q: StateVec


def hadamard_pair(n: int, i: int, j: int) -> CoordinatePlanePair:
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"coordinates ({i}, {j}) outside 0..{n - 1}")
    if not i < j:
        raise NotStrictlyOrdered(f"need i < j, got ({i}, {j})")
    p, q = hadamard_rotate(basis_vector(n, i), basis_vector(n, j))
    return CoordinatePlanePair(i, j, p, q)


def pair_alphabet(n: int) -> dict[str, StateVec]:
    """Names e<k>, p<ij>, q<ij> for every basis vector and coordinate pair of C^n."""
    names = {f"e{k}": basis_vector(n, k) for k in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            hp = hadamard_pair(n, i, j)
            names[f"p{i}{j}"] = hp.p
            names[f"q{i}{j}"] = hp.q
    return names


# -- cardinality 13: C^6 = U + V with U = span{e0..e3}, V = span{e4, e5} ------

@dataclass(frozen=True)
class Phi13Alphabet:
    a: StateVec
    b: StateVec
    c: StateVec
    d: StateVec
    e: StateVec
    f: StateVec
    g: StateVec
    h: StateVec
    r: StateVec
    x: StateVec
    y: StateVec
    z: StateVec
    w: StateVec
    v: StateVec  # (c - d)/sqrt2, used to build f, g, h, r but never placed in the square

    ENTRY_NAMES = tuple("abcdefghrxyzw")

    def entries(self) -> dict[str, StateVec]:
        return {k: getattr(self, k) for k in self.ENTRY_NAMES}


def phi13_alphabet() -> Phi13Alphabet:
    a, b, c, d, x, y = (basis_vector(6, k) for k in range(6))
    e, v = hadamard_rotate(c, d)
    f, g = hadamard_rotate(b, v)
    h, r = hadamard_rotate(a, v)
    z, w = hadamard_rotate(x, y)
    return Phi13Alphabet(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, r=r, x=x, y=y, z=z, w=w, v=v)


PHI13_NAMES = (
    "c a x y b d",
    "d w a b z c",
    "y f g x e a",
    "a g f e w z",
    "x e y h r b",
    "b z e r h w",
)


def _from_names(rows: Sequence[str], alphabet: Mapping[str, StateVec]) -> QLSquare:
    return QLSquare([[alphabet[t] for t in row.split()] for row in rows])


def build_phi13() -> QLSquare:
    return _from_names(PHI13_NAMES, phi13_alphabet().entries())


@dataclass(frozen=True)
class DirectSumLayout:
    """Block data for a direct-sum construction.

    ``blocks[k]`` is a set of coordinates; ``alphabets[k]`` names the vectors that
    live in block k; ``families[k]`` lists orthonormal bases of that block as
    tuples of names. ``row_types[i][k]`` (resp. ``col_types``) picks the basis of
    block k used by row i (column j). ``cells[i][j] = (k, name)`` places one
    vector. The cell assignment is explicit because the type tables alone do
    not determine it.
    """

    order: int
    blocks: tuple[tuple[int, ...], ...]
    alphabets: tuple[Mapping[str, StateVec], ...]
    families: tuple[tuple[tuple[str, ...], ...], ...]
    row_types: tuple[tuple[int, ...], ...]
    col_types: tuple[tuple[int, ...], ...]
    cells: tuple[tuple[tuple[int, str], ...], ...]


def _check_layout(lay: DirectSumLayout) -> None:
    n = lay.order
    nb = len(lay.blocks)
    if not (len(lay.alphabets) == len(lay.families) == nb):
        raise LayoutInvalid("blocks, alphabets and families must have equal length")
    seen = [c for b in lay.blocks for c in b]
    if sorted(seen) != list(range(n)):
        raise LayoutInvalid(f"blocks {lay.blocks} do not partition 0..{n - 1}")
    for k, (block, alpha) in enumerate(zip(lay.blocks, lay.alphabets)):
        for name, vec in alpha.items():
            if vec.dim != n:
                raise LayoutInvalid(f"vector {name!r} of block {k} has dimension {vec.dim}")
            if not set(vec.support) <= set(block):
                raise LayoutInvalid(f"vector {name!r} is not supported on block {k}")
        for fi, basis in enumerate(lay.families[k]):
            missing = [t for t in basis if t not in alpha]
            if missing:
                raise LayoutInvalid(f"basis {fi} of block {k} names unknown vectors {missing}")
            rep = is_orthonormal_set([alpha[t] for t in basis])
            # orthonormal within the block's span: dimension is len(block), not n
            if rep.pair is not None or len(basis) != len(block):
                raise LayoutInvalid(f"basis {fi} of block {k} is not an orthonormal basis "
                                    f"of the block: {rep.reason or 'wrong size'}")
    for label, types in (("row", lay.row_types), ("column", lay.col_types)):
        if len(types) != n:
            raise LayoutInvalid(f"{label} type table has {len(types)} entries, expected {n}")
        for idx, t in enumerate(types):
            if len(t) != nb or any(not 0 <= f < len(lay.families[k]) for k, f in enumerate(t)):
                raise LayoutInvalid(f"{label} {idx} has an invalid type {t}")
    if len(lay.cells) != n or any(len(r) != n for r in lay.cells):
        raise LayoutInvalid("cell assignment is not n x n")
    for i in range(n):
        for j in range(n):
            k, name = lay.cells[i][j]
            if not 0 <= k < nb or name not in lay.alphabets[k]:
                raise LayoutInvalid(f"cell {(i, j)} refers to unknown vector {(k, name)}")
    for label, types in (("row", lay.row_types), ("column", lay.col_types)):
        for idx in range(n):
            line = lay.cells[idx] if label == "row" else tuple(r[idx] for r in lay.cells)
            for k in range(nb):
                got = Counter(name for kk, name in line if kk == k)
                want = Counter(lay.families[k][types[idx][k]])
                if got != want:
                    raise LayoutInvalid(
                        f"{label} {idx}, block {k}: cells hold {sorted(got.elements())} "
                        f"but basis {types[idx][k]} is {sorted(want.elements())}")


def build_direct_sum(layout: DirectSumLayout) -> QLSquare:
    """Assemble a square whose every line is a union of block bases.

    Raises LayoutInvalid naming the first violated condition.
    """
    _check_layout(layout)
    return QLSquare([[layout.alphabets[k][name] for k, name in row] for row in layout.cells])


def phi13_layout() -> DirectSumLayout:
    alpha = phi13_alphabet().entries()
    u_names, v_names = "abcdefghr", "xyzw"
    u_alpha = {t: alpha[t] for t in u_names}
    v_alpha = {t: alpha[t] for t in v_names}
    b_fam = (tuple("abcd"), tuple("aefg"), tuple("behr"))
    s_fam = (tuple("xy"), tuple("zw"))
    row_types = ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1))
    col_types = ((0, 0), (1, 1), (1, 0), (2, 0), (2, 1), (0, 1))
    cells = tuple(tuple((0 if t in u_names else 1, t) for t in row.split()) for row in PHI13_NAMES)
    return DirectSumLayout(
        order=6,
        blocks=((0, 1, 2, 3), (4, 5)),
        alphabets=(u_alpha, v_alpha),
        families=(b_fam, s_fam),
        row_types=row_types,
        col_types=col_types,
        cells=cells,
    )


# -- cardinalities 15 and 17: coordinate-plane Hadamard pairs ------------------

PHI15_PAIRS = ((0, 1), (0, 4), (1, 2), (2, 3), (2, 4))
PHI15_SINGLES = (0, 1, 3, 4, 5)
PHI17_PAIRS = ((0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (2, 3), (2, 4))
PHI17_SINGLES = (3, 4, 5)

PHI15_NAMES = (
    "p04 p12 q12 e3 q04 e5",
    "p23 e5 e4 p01 q23 q01",
    "e1 e0 e3 p24 e5 q24",
    "q04 q12 p12 e5 p04 e3",
    "q23 e4 e5 q01 p23 p01",
    "e5 e3 e0 q24 e1 p24",
)

PHI17_NAMES = (
    "p04 p12 q12 e3 q04 e5",
    "p23 e5 e4 p01 q23 q01",
    "p15 p03 q03 p24 q15 q24",
    "q04 q12 p12 e5 p04 e3",
    "q23 e4 e5 q01 p23 p01",
    "q15 q03 p03 q24 p15 p24",
)


def build_phi15() -> QLSquare:
    return _from_names(PHI15_NAMES, pair_alphabet(6))


def build_phi17() -> QLSquare:
    return _from_names(PHI17_NAMES, pair_alphabet(6))


FIXTURES = {"phi13": build_phi13, "phi15": build_phi15, "phi17": build_phi17}


# -- classical embedding ------------------------------------------------------

def _latin_violation(L: Sequence[Sequence[int]]):
    n = len(L)
    for i, row in enumerate(L):
        if len(row) != n:
            return ("row", i)
        if sorted(row) != list(range(n)):
            return ("row", i)
    for j in range(n):
        if sorted(L[i][j] for i in range(n)) != list(range(n)):
            return ("col", j)
    return None


def build_from_classical(L: Sequence[Sequence[int]]) -> QLSquare:
    """Cell (i, j) becomes e_{L[i][j]}. Symbols must be 0..n-1."""
    if not L:
        raise NotLatin("empty array")
    bad = _latin_violation(L)
    if bad is not None:
        raise NotLatin(f"not a Latin square: {bad[0]} {bad[1]}", line=bad)
    n = len(L)
    basis = [basis_vector(n, k) for k in range(n)]
    return QLSquare([[basis[s] for s in row] for row in L])


def cyclic_latin_square(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]
