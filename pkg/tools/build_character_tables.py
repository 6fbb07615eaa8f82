#!/usr/bin/env python3
"""Generate the bundled character table JSON files.

Method: exact Burnside class-algebra splitting.  The class sums K_i span
the center; the row vector u with u_l = |C_l| chi(g_l) / chi(1) is a
common left eigenvector of every class-multiplication matrix M_i.  All
characters of the crystallographic types are rational, so the splitting
happens over Q; type H3 needs the quadratic extension Q(sqrt(5)).

Run from the repository root:  python tools/build_character_tables.py [TYPES...]
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import sympy as sp

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coxcells.cells import ClassFunction  # noqa: E402
from coxcells.chartable import (  # noqa: E402
    MolienData,
    _default_names,
    b_invariant,
    validate_character_table,
    CharacterTable,
)
from coxcells.coxgraph import CoxeterGraph  # noqa: E402
from coxcells.grouptable import ElementTable, conjugacy_analysis  # noqa: E402
from coxcells.rings import RingEl  # noqa: E402
from coxcells.rootdata import build_group  # noqa: E402

DEFAULT_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "F4", "H3", "E6"]


def class_matrix_transposed(table, conj, i):
    """M_i^T where (M_i)[l][j] = #{x in C_i : x^{-1} g_l in C_j}."""
    k = len(conj.classes)
    rows = [[0] * k for _ in range(k)]  # rows[j][l] = (M_i)[l][j]
    inv = table.inv
    class_of = conj.class_of
    xs = [inv[x] for x in conj.classes[i].ids]
    for l in range(k):
        gl = conj.classes[l].rep_id
        word = table.word_of(gl)
        r = table.rank
        rmul = table.rmul
        row_l = rows
        for xinv in xs:
            y = xinv
            for s in word:
                y = rmul[y * r + s]
            rows[class_of[y]][l] += 1
    return sp.Matrix(rows)


def split_spaces(table, conj):
    """1-dimensional common eigenspaces of the class algebra (left eigenvectors)."""
    k = len(conj.classes)
    order = sorted(range(k), key=lambda i: conj.classes[i].size)
    spaces = [sp.eye(k)]
    for i in order:
        if conj.classes[i].size == 1 and conj.classes[i].element_order == 1:
            continue
        if all(b.shape[1] == 1 for b in spaces):
            break
        mt = class_matrix_transposed(table, conj, i)
        nxt = []
        for basis in spaces:
            if basis.shape[1] == 1:
                nxt.append(basis)
                continue
            # restriction R of M_i^T to the (invariant) subspace
            ab = mt * basis
            r = (basis.T * basis).inv() * (basis.T * ab)
            assert sp.simplify(basis * r - ab).is_zero_matrix
            for _val, _mult, vecs in r.eigenvects():
                sub = sp.Matrix.hstack(*vecs)
                nxt.append(basis * sub)
        spaces = nxt
        print(f"    after class {i} (size {conj.classes[i].size}): "
              f"{sorted(b.shape[1] for b in spaces)}")
    assert all(b.shape[1] == 1 for b in spaces), "class matrices did not fully split"
    return [b[:, 0] for b in spaces]


def characters_from_eigenvectors(table, conj, vectors):
    order = table.size
    ident = conj.class_of[0]
    chars = []
    for u in vectors:
        u = sp.simplify(u / u[ident])
        s = sum(u[j] ** 2 / conj.classes[j].size for j in range(len(u)))
        d2 = sp.simplify(order / s)
        d = sp.sqrt(d2)
        assert d.is_integer and d > 0, f"degree^2 = {d2} is not a perfect square"
        vals = [sp.simplify(d * u[j] / conj.classes[j].size) for j in range(len(u))]
        chars.append((int(d), vals))
    chars.sort(key=lambda c: (c[0], [sp.default_sort_key(v) for v in c[1]]))
    return chars


def encode_value(v, ring):
    v = sp.nsimplify(sp.simplify(v), [sp.sqrt(5)])
    if ring is None:
        assert v.is_integer, f"non-integer character value {v}"
        return int(v)
    # express a + b*sqrt(5) in the basis (1, g) with g = (1+sqrt(5))/2
    a = sp.Rational(sp.simplify((v + v.subs(sp.sqrt(5), -sp.sqrt(5))) / 2))
    b = sp.Rational(sp.simplify((v - v.subs(sp.sqrt(5), -sp.sqrt(5))) / (2 * sp.sqrt(5))))
    c0 = a - b
    c1 = 2 * b
    assert c0.is_integer and c1.is_integer, f"value {v} not in Z[g]"
    return [int(c0), int(c1)]


def decode_for_validation(enc, ring):
    if isinstance(enc, list):
        return RingEl(ring, tuple(enc))
    return enc


def build_one(type_name: str) -> dict:
    t0 = time.time()
    datum = build_group(CoxeterGraph.from_spec(type_name))
    table = ElementTable(datum)
    conj = conjugacy_analysis(table)
    print(f"  {type_name}: |W|={table.size}, {len(conj.classes)} classes "
          f"({time.time()-t0:.1f}s)")
    vectors = split_spaces(table, conj)
    chars = characters_from_eigenvectors(table, conj, vectors)

    ring = datum.ring
    encoded = []
    rows = []
    degrees = []
    for d, vals in chars:
        enc = [encode_value(v, ring) for v in vals]
        encoded.append(enc)
        rows.append(ClassFunction(tuple(decode_for_validation(e, ring) for e in enc)))
        degrees.append(d)

    molien = MolienData(table, conj)
    bs = [b_invariant(molien, r) for r in rows]
    names = _default_names(degrees, bs, rows)

    ct = CharacterTable(type_name, tuple(names), tuple(degrees), tuple(rows), tuple(bs), ring)
    validate_character_table(table, conj, ct)
    print(f"  {type_name}: validated {len(names)} irreducibles ({time.time()-t0:.1f}s)")

    return {
        "format": "coxcells-chartable",
        "version": 1,
        "type": type_name,
        "order": table.size,
        "ring_m": ring.m if ring is not None else None,
        "classes": [
            {
                "word": list(table.word_of(c.rep_id)),
                "size": c.size,
                "order": c.element_order,
            }
            for c in conj.classes
        ],
        "irreducibles": [
            {"name": names[i], "degree": degrees[i], "b": bs[i], "values": encoded[i]}
            for i in range(len(names))
        ],
    }


def main():
    types = sys.argv[1:] or DEFAULT_TYPES
    outdir = Path(__file__).resolve().parent.parent / "src" / "coxcells" / "data" / "character_tables"
    outdir.mkdir(parents=True, exist_ok=True)
    for t in types:
        print(f"building {t} ...")
        doc = build_one(t)
        path = outdir / f"{t}.json"
        path.write_text(json.dumps(doc, separators=(",", ":"), sort_keys=True))
        print(f"  wrote {path}")


if __name__ == "__main__":
    main()
