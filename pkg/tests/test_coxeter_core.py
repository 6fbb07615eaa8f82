"""Group construction, element arithmetic, enumeration, cosets, conjugacy."""

import pytest

from coxcells.coxgraph import CoxeterGraph
from coxcells.errors import (
    EnumerationBoundExceeded,
    IndexOutOfRange,
    NonFiniteType,
    UnsupportedType,
)
from coxcells.grouptable import (
    ElementTable,
    conjugacy_analysis,
    enumerate_elements,
    min_coset_reps,
    project_parabolic,
)
from coxcells.rootdata import (
    bruhat_leq,
    build_group,
    canonical_word,
    inverse,
    length_and_descents,
    length_of,
    multiply,
    word_to_element,
)

ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120, "A5": 720,
    "B2": 8, "B3": 48, "B4": 384, "D4": 192, "D5": 1920,
    "F4": 1152, "H3": 120, "H4": 14400, "I2(7)": 14, "I2(12)": 24,
}


@pytest.mark.parametrize("spec,order", sorted(ORDERS.items()))
def test_build_and_order(spec, order, grp):
    g = grp(spec)
    assert g.table.size == order
    assert g.datum.order == order
    assert g.datum.N == g.graph.positive_roots


def test_large_types_order_without_enumeration():
    for spec, order in [("E6", 51840), ("E7", 2903040), ("E8", 696729600)]:
        d = build_group(CoxeterGraph.from_spec(spec))
        assert d.order == order
    with pytest.raises(EnumerationBoundExceeded):
        ElementTable(build_group(CoxeterGraph.from_spec("E7")))


def test_parabolic_index_no_enumeration():
    from coxcells.coxgraph import parabolic_index

    e8 = CoxeterGraph.from_spec("E8")
    sub = CoxeterGraph.from_matrix([[e8.coxeter_matrix[i][j] for j in range(7)] for i in range(7)])
    assert sub.type_name == "E7"
    assert parabolic_index(e8, range(7)) == 240
    e7 = CoxeterGraph.from_spec("E7")
    assert parabolic_index(e7, range(6)) == 2903040 // 51840


def test_nonfinite_and_unsupported():
    # affine A_2 tilde: triangle of 3-bonds is not finite
    mat = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]
    with pytest.raises(NonFiniteType):
        CoxeterGraph.from_matrix(mat)
    with pytest.raises(UnsupportedType):
        CoxeterGraph.from_spec("Q5")
    with pytest.raises(UnsupportedType):
        CoxeterGraph.from_matrix([[1, 3], [4, 1]])


def test_word_to_element_basics(grp):
    d = grp("A2").datum
    e = word_to_element(d, [])
    assert e == word_to_element(d, [0, 0])
    assert word_to_element(d, [0, 1, 0]) == word_to_element(d, [1, 0, 1])
    with pytest.raises(IndexOutOfRange):
        word_to_element(d, [2])


def test_canonical_word_examples(grp):
    d = grp("A2").datum
    assert canonical_word(d, word_to_element(d, [])) == ()
    # longest element oracle: enumerate both reduced words of w0, take lex-min
    w0 = word_to_element(d, [0, 1, 0])
    candidates = sorted(
        w for w in [(0, 1, 0), (1, 0, 1)] if word_to_element(d, w) == w0
    )
    assert canonical_word(d, w0) == candidates[0] == (0, 1, 0)

    d4 = grp("I2(4)").datum
    w0 = word_to_element(d4, [0, 1, 0, 1])
    cands = sorted(w for w in [(0, 1, 0, 1), (1, 0, 1, 0)] if word_to_element(d4, w) == w0)
    assert canonical_word(d4, w0) == cands[0] == (0, 1, 0, 1)


@pytest.mark.parametrize(
    "spec", ["A3", "A4", "A5", "B3", "B4", "D4", "D5", "F4", "H3", "I2(7)", "I2(12)"]
)
def test_canonical_word_roundtrip(spec, grp):
    g = grp(spec)
    d = g.datum
    for i in range(g.table.size):
        el = g.table.element(i)
        w = canonical_word(d, el)
        assert len(w) == length_of(d, el)
        assert word_to_element(d, w) == el
        assert g.table.word_of(i) == w


def test_length_and_descents_examples(grp):
    g = grp("A2")
    d = g.datum
    e = word_to_element(d, [])
    assert length_and_descents(d, e) == (0, frozenset(), frozenset())
    w0 = word_to_element(d, [0, 1, 0])
    assert length_and_descents(d, w0) == (3, frozenset({0, 1}), frozenset({0, 1}))
    w = word_to_element(d, [0, 1])
    assert length_and_descents(d, w) == (2, frozenset({1}), frozenset({0}))


@pytest.mark.parametrize("spec", ["A3", "B3", "I2(5)"])
def test_length_symmetry_and_parity(spec, grp):
    g = grp(spec)
    d = g.datum
    for i in range(g.table.size):
        el = g.table.element(i)
        el_inv = inverse(d, el)
        l, r, lft = length_and_descents(d, el)
        li, ri, lfti = length_and_descents(d, el_inv)
        assert l == li and r == lfti and lft == ri
        for s in range(d.rank):
            sw = multiply(d, g.table.element(g.table.id_from_word([s])), el)
            assert abs(length_of(d, sw) - l) == 1


def test_bruhat_examples(grp):
    g = grp("A3")
    d = g.datum
    e = word_to_element(d, [])
    for i in range(g.table.size):
        assert bruhat_leq(d, e, g.table.element(i))
    w0 = g.table.element(g.table.size - 1)
    s1 = word_to_element(d, [1])
    big = word_to_element(d, [0, 1, 2, 1])
    assert bruhat_leq(d, s1, big)  # subword check over a reduced word
    assert not bruhat_leq(d, big, s1)
    assert bruhat_leq(d, big, w0)


def test_bruhat_is_partial_order_refining_length(grp):
    g = grp("A3")
    t = g.table
    leq = [[t.bruhat_leq_ids(y, w) for w in range(t.size)] for y in range(t.size)]
    for y in range(t.size):
        assert leq[y][y]
        assert leq[0][y] and leq[y][t.size - 1]
        for w in range(t.size):
            if leq[y][w] and y != w:
                assert t.length[y] < t.length[w]
            for z in range(t.size):
                if leq[y][w] and leq[w][z]:
                    assert leq[y][z]


def test_enumeration_stream(grp):
    d = grp("A2").datum
    els = list(enumerate_elements(d))
    assert len(els) == 6
    assert sorted(length_of(d, e) for e in els) == [0, 1, 1, 2, 2, 3]
    lens = [length_of(d, e) for e in els]
    assert lens == sorted(lens)
    d2 = grp("B2").datum
    assert len(list(enumerate_elements(d2))) == 8
    d3 = grp("H3").datum
    assert len(list(enumerate_elements(d3))) == 120


@pytest.mark.parametrize("spec", ["A3", "B3", "D4"])
def test_coset_reps(spec, grp):
    g = grp(spec)
    t = g.table
    n = t.rank
    full = tuple(range(n))
    assert min_coset_reps(t, full) == [0]
    assert len(min_coset_reps(t, ())) == t.size
    for I in [(0,), (0, 1), tuple(range(n - 1))]:
        xi = min_coset_reps(t, I)
        sub = [w for w in range(t.size) if t.supp[w] | sum(1 << s for s in I) == sum(1 << s for s in I)]
        assert len(xi) * len(sub) == t.size
        for w in range(t.size):
            x, u = project_parabolic(t, I, w)
            assert t.mult_ids(x, u) == w
            assert t.length[x] + t.length[u] == t.length[w]
            assert not (t.rmask[x] & sum(1 << s for s in I))


def test_project_parabolic_examples(grp):
    g = grp("A2")
    t = g.table
    w = t.id_from_word([0, 1, 0])
    x, u = project_parabolic(t, (0,), w)
    # oracle: brute-force over the three cosets of W_{s0}
    sub = {0, t.id_from_word([0])}
    best = None
    for xx in range(t.size):
        for uu in sub:
            if t.mult_ids(xx, uu) == w and t.length[xx] + t.length[uu] == t.length[w]:
                if not (t.rmask[xx] & 1):
                    best = (xx, uu)
    assert (x, u) == best
    assert project_parabolic(t, (0,), t.id_from_word([0]))[0] == 0
    xw = t.id_from_word([1])
    assert project_parabolic(t, (0,), xw) == (xw, 0)


def test_conjugacy_analysis(grp):
    g = grp("A2")
    conj = g.conjugacy
    assert sorted(c.size for c in conj.classes) == [1, 2, 3]
    assert len(conj.involutions) == 4
    assert sum(c.size for c in conj.classes) == 6

    g4 = grp("I2(4)")
    conj4 = g4.conjugacy
    assert len(conj4.classes) == 5
    w0_class = conj4.classes[conj4.class_of[g4.table.size - 1]]
    assert w0_class.size == 1

    for gg, cj in [(g, conj), (g4, conj4)]:
        for c in cj.classes:
            assert c.min_length == min(gg.table.length[i] for i in c.ids)
            assert set(c.min_ids) == {i for i in c.ids if gg.table.length[i] == c.min_length}


@pytest.mark.parametrize("spec", ["A3", "B3", "H3"])
def test_involution_count_matches_degree_sum(spec, grp):
    g = grp(spec)
    assert len(g.conjugacy.involutions) == sum(g.character_table.degrees)


def test_cuspidal_detection(grp):
    g = grp("A2")
    # the Coxeter class (rotations) is the only cuspidal one in A2
    cusp = [c for c in g.conjugacy.classes if c.cuspidal]
    assert len(cusp) == 1 and cusp[0].element_order == 3
