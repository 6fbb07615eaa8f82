"""Cell partitions, modules, characters, a-values, specials, involutions."""

import numpy as np
import pytest

from coxcells import cells as C
from coxcells import chartable as CT
from coxcells.cprime import StructureConstantOracle
from coxcells.laurent import LaurentPoly

SMALL = ["A2", "A3", "B2", "B3", "I2(5)", "I2(9)", "I2(12)", "H3"]
MID = SMALL + ["A4", "A5", "B4", "D4", "D5", "F4"]


def test_a2_partitions(grp):
    g = grp("A2")
    t = g.table
    blocks = {frozenset(t.word_of(w) for w in b) for b in g.left_cells.blocks}
    assert blocks == {
        frozenset({()}),
        frozenset({(0,), (1, 0)}),
        frozenset({(1,), (0, 1)}),
        frozenset({(0, 1, 0)}),
    }
    assert len(g.two_sided_cells.blocks) == 3


@pytest.mark.parametrize("m", range(3, 13))
def test_dihedral_cells(m, grp):
    g = grp(f"I2({m})")
    sizes = sorted(len(b) for b in g.left_cells.blocks)
    assert sizes == [1, 1, m - 1, m - 1]
    assert len(g.two_sided_cells.blocks) == 3
    # the two middle cells are {words ending 0} and {words ending 1}
    for b in g.left_cells.blocks:
        if len(b) == m - 1:
            last = {g.table.word_of(w)[-1] for w in b}
            assert len(last) == 1


@pytest.mark.parametrize("spec", MID)
def test_partition_structure(spec, grp):
    g = grp(spec)
    t = g.table
    left, right, two = g.left_cells, g.right_cells, g.two_sided_cells
    # right cells are inverses of left cells
    assert {frozenset(t.inv[w] for w in b) for b in left.blocks} == {
        frozenset(b) for b in right.blocks
    }
    # constant descent sets
    for b in left.blocks:
        assert len({t.rmask[w] for w in b}) == 1
    for b in right.blocks:
        assert len({t.lmask[w] for w in b}) == 1
    # two-sided blocks are unions of left and of right blocks
    for part in (left, right):
        for b in part.blocks:
            assert len({two.block_of[w] for w in b}) == 1
    # inversion fixes two-sided blocks setwise
    for b in two.blocks:
        assert sorted(t.inv[w] for w in b) == list(b)
    # {e} and {w0} are singleton two-sided cells
    assert two.blocks[two.block_of[0]] == (0,)
    assert two.blocks[two.block_of[t.size - 1]] == (t.size - 1,)


@pytest.mark.parametrize("spec", MID)
def test_ordering_property(spec, grp):
    g = grp(spec)
    assert C.verify_ordering_property(g.table, g.kl, g.left_cells, g.two_sided_cells) == []


def test_cell_module_examples(grp):
    g = grp("A2")
    t, klt = g.table, g.kl
    left = g.left_cells
    # singletons
    e_mod = C.cell_module(t, klt, (0,))
    w0_mod = C.cell_module(t, klt, (t.size - 1,))
    for s in range(t.rank):
        assert e_mod.ts_matrix_at_one(s)[0, 0] == 1.0
        assert w0_mod.ts_matrix_at_one(s)[0, 0] == -1.0
    assert C.hecke_cell_trace(t, e_mod, t.size - 1) == LaurentPoly({3: 1})
    assert C.hecke_cell_trace(t, w0_mod, t.size - 1) == LaurentPoly({-3: -1})
    # two-dimensional middle cell affords the 2-dim irreducible of S3
    blk = next(b for b in left.blocks if len(b) == 2)
    mod = C.cell_module(t, klt, blk)
    chi = C.cell_character(t, mod, g.conjugacy)
    ref = g.character_table.rows[g.character_table.index_of("2_1")]
    assert chi.values == ref.values


@pytest.mark.parametrize("spec", ["A3", "B3", "H3", "I2(8)"])
def test_cell_module_relations(spec, grp):
    g = grp(spec)
    for b in g.left_cells.blocks:
        if len(b) <= 8:
            mod = C.cell_module(g.table, g.kl, b)
            assert C.quadratic_and_braid_check(mod, g.graph.coxeter_matrix)


@pytest.mark.parametrize("spec", MID)
def test_regular_character_decomposition(spec, grp):
    g = grp(spec)
    ident = g.conjugacy.class_of[0]
    total = [0] * len(g.conjugacy.classes)
    for mod, chi in zip(g.cell_modules, g.cell_characters):
        assert chi.values[ident] == mod.dimension
        for j, v in enumerate(chi.values):
            total[j] += v
    assert total[ident] == g.table.size
    assert all(v == 0 for j, v in enumerate(total) if j != ident)


def test_hecke_trace_specializes_to_character(grp):
    g = grp("B3")
    mod = g.cell_modules[3]
    chi = g.cell_characters[3]
    for ci, cls in enumerate(g.conjugacy.classes):
        tr = C.hecke_cell_trace(g.table, mod, cls.rep_id)
        assert tr.at_one() == chi.values[ci]
    # identity: trace is the constant |cell|
    assert C.hecke_cell_trace(g.table, mod, 0) == LaurentPoly({0: mod.dimension})


@pytest.mark.parametrize("spec", MID)
def test_a_value_basics(spec, grp):
    g = grp(spec)
    av = g.a_values
    two = g.two_sided_cells
    t = g.table
    assert av[two.block_of[0]] == 0
    assert av[two.block_of[t.size - 1]] == t.max_length
    assert all(0 <= a <= t.max_length for a in av)
    # a(w) = a(w^{-1}) by inversion-stability of two-sided blocks
    for w in range(t.size):
        assert g.a_of_element(w) == g.a_of_element(t.inv[w])


@pytest.mark.parametrize("spec", ["A2", "A3", "B2", "B3", "H3"] + [f"I2({m})" for m in range(3, 13)])
def test_a_values_match_oracle(spec, grp):
    """Trace route == brute-force h-constant degrees, per two-sided cell."""
    g = grp(spec)
    orc = StructureConstantOracle(g.table, g.kl)
    for bi, blk in enumerate(g.two_sided_cells.blocks):
        for w in blk:
            assert orc.max_h_degree(w) == g.a_values[bi]


@pytest.mark.parametrize("spec", MID)
def test_b_invariant_examples(spec, grp):
    g = grp(spec)
    molien = CT.MolienData(g.table, g.conjugacy)
    triv = C.ClassFunction(tuple(1 for _ in g.conjugacy.classes))
    sgn = C.ClassFunction(tuple((-1) ** g.table.length[c.rep_id] for c in g.conjugacy.classes))
    assert CT.b_invariant(molien, triv) == 0
    assert CT.b_invariant(molien, sgn) == g.datum.N
    if spec == "A2":
        # reflection character of A2 via exact matrix traces
        mats = [g.datum.simple_reflection_matrix(i) for i in range(2)]
        vals = []
        for c in g.conjugacy.classes:
            m = [[1 if i == j else 0 for j in range(2)] for i in range(2)]
            for s in g.table.word_of(c.rep_id):
                m = [[sum(m[i][k] * mats[s][k][j] for k in range(2)) for j in range(2)] for i in range(2)]
            vals.append(m[0][0] + m[1][1])
        assert CT.b_invariant(molien, C.ClassFunction(tuple(vals))) == 1


@pytest.mark.parametrize("spec", MID)
def test_families_and_specials(spec, grp):
    g = grp(spec)
    ct = g.character_table
    infos = g.two_sided_info
    assert len(infos) == len(g.two_sided_cells.blocks)
    for info in infos:
        assert info.special in info.family
        assert ct.b_invariants[ct.index_of(info.special)] == info.a_value
    # families partition Irr(W)
    seen = [n for i in infos for n in i.family]
    assert sorted(seen) == sorted(ct.names)
    assert CT.advisory_b_minimality(ct, infos) == []


def test_family_examples(grp):
    g = grp("A2")
    infos = {i.block: i for i in g.two_sided_info}
    e_block = g.two_sided_cells.block_of[0]
    w0_block = g.two_sided_cells.block_of[g.table.size - 1]
    assert infos[e_block].family == ("1_0",) and infos[e_block].special == "1_0"
    assert infos[w0_block].family == ("1_3",) and infos[w0_block].special == "1_3"


@pytest.mark.parametrize("spec", MID)
def test_distinguished_involutions(spec, grp):
    g = grp(spec)
    dinv = g.distinguished_involutions
    left = g.left_cells
    assert len(dinv) == len(left.blocks)
    assert 0 in dinv and (g.table.size - 1) in dinv
    seen = {left.block_of[d] for d in dinv}
    assert len(seen) == len(left.blocks)
    for d in dinv:
        assert g.table.inv[d] == d


def test_multiplicity_examples(grp):
    g = grp("A3")
    conj = g.conjugacy
    ct = g.character_table
    chi_e = g.cell_characters[g.left_cells.block_of[0]]
    chi_w0 = g.cell_characters[g.left_cells.block_of[g.table.size - 1]]
    assert CT.multiplicity(conj, chi_e, ct, "1_0") == 1
    assert CT.multiplicity(conj, chi_w0, ct, f"1_{g.datum.N}") == 1
    for name, deg in zip(ct.names, ct.degrees):
        assert sum(CT.multiplicity(conj, chi, ct, name) for chi in g.cell_characters) == deg


def test_exactness_guard():
    m = np.full((2, 2), 3e15)
    with pytest.raises(Exception):
        C._exact_trace(m @ m @ m @ m)


def test_cell_partition_export(grp):
    g = grp("A2")
    doc = g.left_cells.export(g.table)
    assert doc["side"] == "left"
    assert sorted(len(b["elements"]) for b in doc["blocks"]) == [1, 1, 2, 2]
