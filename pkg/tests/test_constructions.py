from dataclasses import replace

import pytest

from qlsquares.constructions import (
    PHI15_PAIRS, PHI15_SINGLES, PHI17_PAIRS, PHI17_SINGLES, DirectSumLayout, build_direct_sum,
    build_from_classical, build_phi13, build_phi15, build_phi17, cyclic_latin_square, hadamard_pair,
    pair_alphabet, phi13_alphabet, phi13_layout,
)
from qlsquares.errors import IndexOutOfRange, LayoutInvalid, NotLatin, NotStrictlyOrdered
from qlsquares.linalg import StateVec, basis_vector, is_orthonormal_set, phase_key
from qlsquares.scalar import parse_scalar
from qlsquares.square import cardinality, line_decomposition, verify

S = "1/2*r2"

# row and column decomposition tables for the cardinality-15 and -17 squares
PHI15_ROWS = [
    "(04)∪(12)∪{3}∪{5}",
    "(23)∪(01)∪{4}∪{5}",
    "(24)∪{0}∪{1}∪{3}∪{5}",
    "(04)∪(12)∪{3}∪{5}",
    "(23)∪(01)∪{4}∪{5}",
    "(24)∪{0}∪{1}∪{3}∪{5}",
]
PHI15_COLS = [
    "(04)∪(23)∪{1}∪{5}",
    "(12)∪{0}∪{3}∪{4}∪{5}",
    "(12)∪{0}∪{3}∪{4}∪{5}",
    "(01)∪(24)∪{3}∪{5}",
    "(04)∪(23)∪{1}∪{5}",
    "(01)∪(24)∪{3}∪{5}",
]
PHI17_ROWS = [
    "(04)∪(12)∪{3}∪{5}",
    "(23)∪(01)∪{4}∪{5}",
    "(15)∪(03)∪(24)",
    "(04)∪(12)∪{3}∪{5}",
    "(23)∪(01)∪{4}∪{5}",
    "(15)∪(03)∪(24)",
]
PHI17_COLS = [
    "(04)∪(23)∪(15)",
    "(12)∪(03)∪{4}∪{5}",
    "(12)∪(03)∪{4}∪{5}",
    "(01)∪(24)∪{3}∪{5}",
    "(04)∪(23)∪(15)",
    "(01)∪(24)∪{3}∪{5}",
]


def coords_pair(i, j, sign):
    out = ["0"] * 6
    out[i] = S
    out[j] = S if sign > 0 else "-" + S
    return StateVec(parse_scalar(t) for t in out)


def test_hadamard_pair_examples():
    assert hadamard_pair(6, 0, 4).p == StateVec(parse_scalar(t) for t in (S, "0", "0", "0", S, "0"))
    assert hadamard_pair(6, 2, 3).q == StateVec(parse_scalar(t) for t in ("0", "0", S, "-" + S, "0", "0"))
    hp = hadamard_pair(2, 0, 1)
    assert (hp.p.entries, hp.q.entries) == (
        (parse_scalar(S), parse_scalar(S)), (parse_scalar(S), parse_scalar("-" + S)))
    assert is_orthonormal_set([hp.p, hp.q]).ok


@pytest.mark.parametrize("args,exc", [
    ((6, 0, 6), IndexOutOfRange), ((6, -1, 2), IndexOutOfRange),
    ((6, 3, 3), NotStrictlyOrdered), ((6, 4, 2), NotStrictlyOrdered),
])
def test_hadamard_pair_errors(args, exc):
    with pytest.raises(exc):
        hadamard_pair(*args)


def test_phi13_entries():
    q, al = build_phi13(), phi13_alphabet()
    assert q[0, 0] == al.c == basis_vector(6, 2)
    assert q[5, 5] == al.w
    assert cardinality(q).cardinality == 13
    assert al.v not in {v for _, v in q.cells()}
    inventory = {c.key for c in cardinality(q).classes}
    assert inventory == {phase_key(v) for v in al.entries().values()}


def test_phi13_bases():
    al = phi13_alphabet()
    U = {"B0": "abcd", "B1": "aefg", "B2": "behr"}
    V = {"S0": "xy", "S1": "zw"}
    for names in list(U.values()) + list(V.values()):
        vs = [getattr(al, t) for t in names]
        rep = is_orthonormal_set(vs)
        assert rep.pair is None  # orthonormal within the block
    for bu in U.values():
        for sv in V.values():
            assert is_orthonormal_set([getattr(al, t) for t in bu + sv]).ok


def test_phi15_entries_and_inventory():
    q = build_phi15()
    assert q[2, 3] == coords_pair(2, 4, +1)
    names = pair_alphabet(6)
    expected = [names[f"{c}{i}{j}"] for i, j in PHI15_PAIRS for c in "pq"] + [names[f"e{k}"] for k in PHI15_SINGLES]
    rep = cardinality(q)
    assert {c.key for c in rep.classes} == {phase_key(v) for v in expected}
    pair_classes = [c for c in rep.classes if len(c.representative.support) == 2]
    basis_classes = [c for c in rep.classes if len(c.representative.support) == 1]
    assert (len(pair_classes), len(basis_classes)) == (10, 5)
    assert verify(q).valid


def test_phi17_entries_and_inventory():
    q = build_phi17()
    assert q[2, 0] == coords_pair(1, 5, +1)
    names = pair_alphabet(6)
    expected = [names[f"{c}{i}{j}"] for i, j in PHI17_PAIRS for c in "pq"] + [names[f"e{k}"] for k in PHI17_SINGLES]
    rep = cardinality(q)
    assert {c.key for c in rep.classes} == {phase_key(v) for v in expected}
    pair_classes = [c for c in rep.classes if len(c.representative.support) == 2]
    assert (len(pair_classes), rep.cardinality - len(pair_classes)) == (14, 3)
    assert verify(q).valid


def test_named_vectors_match_coordinate_tables():
    names = pair_alphabet(6)
    for i, j in set(PHI15_PAIRS) | set(PHI17_PAIRS):
        assert names[f"p{i}{j}"] == coords_pair(i, j, +1)
        assert names[f"q{i}{j}"] == coords_pair(i, j, -1)
    for k in range(6):
        coords = ["0"] * 6
        coords[k] = "1"
        assert names[f"e{k}"] == StateVec(parse_scalar(t) for t in coords)


@pytest.mark.parametrize("build,rows,cols", [
    (build_phi15, PHI15_ROWS, PHI15_COLS),
    (build_phi17, PHI17_ROWS, PHI17_COLS),
])
def test_decomposition_tables(build, rows, cols):
    q = build()
    assert [str(line_decomposition(q.row(i))) for i in range(6)] == rows
    assert [str(line_decomposition(q.col(j))) for j in range(6)] == cols


def test_direct_sum_reproduces_phi13():
    assert build_direct_sum(phi13_layout()) == build_phi13()


def test_direct_sum_degenerate_classical():
    n = 4
    L = cyclic_latin_square(n)
    alpha = {f"e{k}": basis_vector(n, k) for k in range(n)}
    lay = DirectSumLayout(
        order=n, blocks=(tuple(range(n)),), alphabets=(alpha,),
        families=((tuple(f"e{k}" for k in range(n)),),),
        row_types=((0,),) * n, col_types=((0,),) * n,
        cells=tuple(tuple((0, f"e{s}") for s in row) for row in L),
    )
    q = build_direct_sum(lay)
    assert verify(q).valid and cardinality(q).cardinality == n
    assert q == build_from_classical(L)


def test_direct_sum_rejects_repeated_vector():
    lay = phi13_layout()
    cells = [list(r) for r in lay.cells]
    cells[0][1] = cells[0][0]  # row 0 now holds c twice
    with pytest.raises(LayoutInvalid, match="row 0, block 0"):
        build_direct_sum(replace(lay, cells=tuple(tuple(r) for r in cells)))


def test_direct_sum_rejects_wrong_type_table():
    lay = phi13_layout()
    rows = list(lay.row_types)
    rows[0] = (1, 0)
    with pytest.raises(LayoutInvalid, match="row 0"):
        build_direct_sum(replace(lay, row_types=tuple(rows)))


def test_direct_sum_rejects_non_orthonormal_family():
    lay = phi13_layout()
    fams = list(lay.families)
    fams[0] = fams[0] + (tuple("abce"),)
    with pytest.raises(LayoutInvalid, match="not an orthonormal basis"):
        build_direct_sum(replace(lay, families=tuple(fams)))


def test_direct_sum_rejects_vector_outside_block():
    lay = phi13_layout()
    alphas = list(lay.alphabets)
    alphas[1] = dict(alphas[1], a=basis_vector(6, 0))
    fams = list(lay.families)
    fams[1] = fams[1] + (("a", "x"),)
    with pytest.raises(LayoutInvalid, match="not supported on block 1"):
        build_direct_sum(replace(lay, alphabets=tuple(alphas), families=tuple(fams)))


def test_build_from_classical():
    q = build_from_classical(cyclic_latin_square(3))
    assert verify(q).valid and cardinality(q).cardinality == 3
    one = build_from_classical([[0]])
    assert one.n == 1 and one[0, 0] == basis_vector(1, 0)
    with pytest.raises(NotLatin) as exc:
        build_from_classical([[0, 0], [1, 1]])
    assert exc.value.line == ("row", 0)
    with pytest.raises(NotLatin) as exc:
        build_from_classical([[0, 1], [0, 1]])
    assert exc.value.line == ("col", 0)


def test_builders_are_deterministic():
    from qlsquares import io
    for build in (build_phi13, build_phi15, build_phi17):
        assert io.dumps(build()) == io.dumps(build())
