"""Backtracking enumeration of quantum Latin squares over a finite vector dictionary.

Cells are filled row-major; candidates at every cell are tried in dictionary
index order, so the emission order is fully determined by the inputs. The
orthogonality structure is precomputed once as one bitmask per vector.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .constructions import hadamard_pair
from .errors import DuplicateEntry, IndexOutOfRange, InvalidDictionary
from .linalg import PhaseKey, StateVec, basis_vector, inner_product, phase_key
from .scalar import ONE, Scalar
from .square import QLSquare

__all__ = [
    "Dictionary",
    "SearchConfig",
    "SearchStats",
    "dictionary_from_pairs",
    "enumerate_qls",
    "enumerate_indices",
    "parallel_enumerate",
    "is_symmetry_minimal",
]


@dataclass(frozen=True, eq=False)
class Dictionary:
    dim: int
    vectors: tuple[StateVec, ...]
    names: tuple[str, ...]
    keys: tuple[PhaseKey, ...]
    gram: tuple[tuple[Scalar, ...], ...]
    orth: tuple[int, ...]  # bit k of orth[m] set iff <v_m, v_k> = 0

    @classmethod
    def from_vectors(cls, vectors: Sequence[StateVec], names: Sequence[str] | None = None) -> "Dictionary":
        vectors = tuple(vectors)
        if not vectors:
            raise InvalidDictionary("empty dictionary")
        dim = vectors[0].dim
        if names is None:
            names = tuple(f"v{k}" for k in range(len(vectors)))
        names = tuple(names)
        if len(names) != len(vectors):
            raise InvalidDictionary("names and vectors differ in length")
        for k, v in enumerate(vectors):
            if v.dim != dim:
                raise InvalidDictionary(f"vector {k} has dimension {v.dim}, expected {dim}")
            if v.norm_sq() != ONE:
                raise InvalidDictionary(f"vector {k} is not a unit vector")
        keys = tuple(phase_key(v) for v in vectors)
        seen: dict[PhaseKey, int] = {}
        for k, key in enumerate(keys):
            if key in seen:
                raise InvalidDictionary(f"vectors {seen[key]} and {k} are phase-equivalent")
            seen[key] = k
        gram = tuple(tuple(inner_product(u, v) for v in vectors) for u in vectors)
        orth = tuple(sum(1 << k for k, g in enumerate(row) if g.is_zero()) for row in gram)
        return cls(dim, vectors, names, keys, gram, orth)

    def __len__(self) -> int:
        return len(self.vectors)

    def index(self, v: StateVec) -> int:
        """Dictionary index of the phase class of ``v``."""
        key = phase_key(v)
        try:
            return self.keys.index(key)
        except ValueError:
            raise KeyError(f"{v!r} is not in the dictionary") from None

    def square(self, idx: Sequence[Sequence[int]] | Sequence[int]) -> QLSquare:
        n = self.dim
        flat = list(itertools.chain.from_iterable(idx)) if idx and not isinstance(idx[0], int) else list(idx)
        return QLSquare([[self.vectors[flat[i * n + j]] for j in range(n)] for i in range(n)])


def dictionary_from_pairs(n: int, pairs: Sequence[tuple[int, int]], singles: Sequence[int]) -> Dictionary:
    """Hadamard pairs (p then q, in the given order) followed by basis vectors."""
    pairs = [tuple(p) for p in pairs]
    singles = list(singles)
    if len(set(pairs)) != len(pairs):
        raise DuplicateEntry(f"repeated pair in {pairs}")
    if len(set(singles)) != len(singles):
        raise DuplicateEntry(f"repeated basis index in {singles}")
    for k in singles:
        if not 0 <= k < n:
            raise IndexOutOfRange(f"basis index {k} outside 0..{n - 1}")
    vecs, names = [], []
    for i, j in pairs:
        hp = hadamard_pair(n, i, j)
        vecs += [hp.p, hp.q]
        names += [f"p{i}{j}", f"q{i}{j}"]
    for k in singles:
        vecs.append(basis_vector(n, k))
        names.append(f"e{k}")
    return Dictionary.from_vectors(vecs, names)


@dataclass(frozen=True)
class SearchConfig:
    """Search limits.

    ``card_range`` keeps squares whose cardinality lies in [lo, hi].
    ``prefix`` fixes the first cells (row-major) to the given dictionary indices.
    With ``symmetry`` only squares that are lexicographically minimal under row
    and column permutations are emitted.
    """

    card_range: tuple[int, int] | None = None
    max_nodes: int | None = None
    max_results: int | None = None
    symmetry: bool = False
    prefix: tuple[int, ...] = ()

    def __post_init__(self):
        if self.card_range is not None:
            lo, hi = self.card_range
            if lo > hi:
                raise ValueError(f"empty cardinality range {self.card_range}")
        for name in ("max_nodes", "max_results"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    row_prunes: int = 0
    col_prunes: int = 0
    capacity_prunes: int = 0
    card_prunes: int = 0
    found: int = 0
    rejected_symmetry: int = 0
    exhausted: bool = False  # node budget ran out before the tree was finished
    elapsed: float = 0.0
    _t0: float = field(default=0.0, repr=False, compare=False)

    def line(self) -> str:
        return (f"nodes={self.nodes} row_prunes={self.row_prunes} col_prunes={self.col_prunes} "
                f"capacity_prunes={self.capacity_prunes} card_prunes={self.card_prunes} "
                f"found={self.found} budget_exhausted={self.exhausted} time={self.elapsed:.3f}s")


class _Budget(Exception):
    pass


def _ranks(d: Dictionary) -> list[int]:
    order = sorted(range(len(d)), key=lambda k: d.keys[k].text())
    rank = [0] * len(d)
    for r, k in enumerate(order):
        rank[k] = r
    return rank


def is_symmetry_minimal(flat: Sequence[int], n: int, rank: Sequence[int]) -> bool:
    """Whether the row-major array of ranks is the lexicographic minimum over all
    row and column permutations. For a fixed column permutation the best row
    permutation simply sorts the rows, so only n! column permutations are tried."""
    rows = [tuple(rank[flat[i * n + j]] for j in range(n)) for i in range(n)]
    mine = tuple(rows)
    for cp in itertools.permutations(range(n)):
        cand = tuple(sorted(tuple(r[c] for c in cp) for r in rows))
        if cand < mine:
            return False
    return True


def enumerate_indices(d: Dictionary, cfg: SearchConfig = SearchConfig(),
                      stats: SearchStats | None = None) -> Iterator[tuple[int, ...]]:
    """Yield squares as row-major tuples of dictionary indices.

    ``stats`` is updated in place and remains valid after the generator ends.
    """
    if stats is None:
        stats = SearchStats()
    stats._t0 = time.perf_counter()
    n = d.dim
    m = len(d)
    cells = n * n
    full = (1 << m) - 1
    orth = d.orth
    lo, hi = cfg.card_range if cfg.card_range is not None else (0, cells)
    max_nodes = cfg.max_nodes
    max_results = cfg.max_results
    rank = _ranks(d) if cfg.symmetry else None
    prefix = tuple(cfg.prefix)
    if len(prefix) > cells or any(not 0 <= k < m for k in prefix):
        raise InvalidDictionary(f"prefix {prefix} does not fit the dictionary")

    row_mask = [full] * n
    col_mask = [full] * n
    used = [0] * m
    flat = [0] * cells
    distinct = 0

    def rec(pos: int):
        nonlocal distinct
        if pos == cells:
            if distinct < lo:
                return
            if rank is not None and not is_symmetry_minimal(flat, n, rank):
                stats.rejected_symmetry += 1
                return
            yield tuple(flat)
            return
        i, j = divmod(pos, n)
        rmask = row_mask[i]
        cmask = col_mask[j]
        allowed = rmask & cmask
        rc = rmask.bit_count()
        ac = allowed.bit_count()
        stats.row_prunes += m - rc
        stats.col_prunes += rc - ac
        if pos < len(prefix):
            k = prefix[pos]
            allowed &= 1 << k
        need_r = n - j - 1
        need_c = n - i - 1
        left = cells - pos - 1
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            k = low.bit_length() - 1
            if max_nodes is not None and stats.nodes >= max_nodes:
                raise _Budget
            stats.nodes += 1
            o = orth[k]
            nr = rmask & o
            nc = cmask & o
            if nr.bit_count() < need_r or nc.bit_count() < need_c:
                stats.capacity_prunes += 1
                continue
            fresh = used[k] == 0
            nd = distinct + fresh
            if nd > hi or nd + left < lo:
                stats.card_prunes += 1
                continue
            flat[pos] = k
            used[k] += 1
            distinct = nd
            row_mask[i] = nr
            col_mask[j] = nc
            yield from rec(pos + 1)
            row_mask[i] = rmask
            col_mask[j] = cmask
            used[k] -= 1
            distinct -= fresh

    try:
        for sq in rec(0):
            stats.found += 1
            stats.elapsed = time.perf_counter() - stats._t0
            yield sq
            if max_results is not None and stats.found >= max_results:
                return
    except _Budget:
        stats.exhausted = True
    finally:
        stats.elapsed = time.perf_counter() - stats._t0


def enumerate_qls(d: Dictionary, cfg: SearchConfig = SearchConfig(),
                  stats: SearchStats | None = None) -> Iterator[tuple[QLSquare, SearchStats]]:
    """Stream (square, stats snapshot) pairs; see :func:`enumerate_indices`.

    Budget exhaustion is not an error: the stream just ends and
    ``stats.exhausted`` is set on the caller's stats object.
    """
    if stats is None:
        stats = SearchStats()
    for flat in enumerate_indices(d, cfg, stats):
        yield d.square(flat), replace(stats)


def _worker(args):
    d, cfg = args
    stats = SearchStats()
    found = list(enumerate_indices(d, cfg, stats))
    return found, stats


def parallel_enumerate(d: Dictionary, cfg: SearchConfig = SearchConfig(), workers: int = 2,
                       ) -> tuple[list[tuple[int, ...]], list[SearchStats]]:
    """Split the tree on the first unfixed cell and search the subtrees in parallel.

    Results are merged in subtree (dictionary index) order, which reproduces the
    sequential emission order. Budgets apply per subtree; the merged list is then
    cut to ``max_results``.
    """
    base = tuple(cfg.prefix)
    jobs = [(d, replace(cfg, prefix=base + (k,))) for k in range(len(d))]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_worker, jobs))
    merged = [sq for found, _ in parts for sq in found]
    if cfg.max_results is not None:
        merged = merged[: cfg.max_results]
    return merged, [s for _, s in parts]
