"""Character tables, b-invariants, multiplicities and special representations.

Tables for the crystallographic types and H3 are bundled JSON data files
(generated once by tools/build_character_tables.py and validated at load
time by degree and orthogonality checks); dihedral tables are produced on
the fly from the closed form.  Character values are exact: integers, or
Z[2*cos(pi/m)] elements encoded as coefficient vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .cells import CellPartition, ClassFunction
from .errors import CoxcellsError, SpecialNotUnique, TableMismatch
from .grouptable import ConjugacyData, ElementTable
from .rings import RealCyclotomicRing, RingEl


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters, aligned with a group's conjugacy class order."""

    type_name: str
    names: tuple[str, ...]
    degrees: tuple[int, ...]
    rows: tuple[ClassFunction, ...]
    b_invariants: tuple[int, ...]
    ring: RealCyclotomicRing | None

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def __len__(self):
        return len(self.names)


# ---------------------------------------------------------------------------
# exact helpers


def _as_rational_int(x) -> int:
    if isinstance(x, RingEl):
        if not x.is_rational():
            raise CoxcellsError(f"expected a rational value, got {x!r}")
        return x.rational_value()
    return x


def inner_product(conj: ConjugacyData, chi: ClassFunction, psi: ClassFunction) -> int:
    """Class-weighted inner product; all our characters are real-valued."""
    order = sum(c.size for c in conj.classes)
    acc = 0
    for c, a, b in zip(conj.classes, chi.values, psi.values):
        acc = acc + c.size * a * b
    if isinstance(acc, RingEl):
        acc = acc.divide_exact(order)
        return _as_rational_int(acc)
    q, r = divmod(acc, order)
    if r:
        raise CoxcellsError("inner product is not an integer (class data mismatch)")
    return q


def multiplicity(conj: ConjugacyData, chi_cell: ClassFunction, table: CharacterTable, name: str) -> int:
    """m(cell, E): multiplicity of the irreducible E in the specialized cell module."""
    m = inner_product(conj, chi_cell, table.rows[table.index_of(name)])
    if m < 0:
        raise CoxcellsError(f"negative multiplicity for {name}")
    return m


# ---------------------------------------------------------------------------
# Molien series / b-invariants


def _berkowitz_charpoly(rows, zero, one):
    """Division-free characteristic polynomial, descending coefficients.

    Returns [1, c1, ..., cn] with det(xI - A) = x^n + c1 x^(n-1) + ... + cn.
    """
    n = len(rows)
    if n == 0:
        return [one]
    poly = [one, zero - rows[0][0]]
    for k in range(1, n):
        A = [row[:k] for row in rows[:k]]
        R = rows[k][:k]
        C = [rows[i][k] for i in range(k)]
        t = [one, zero - rows[k][k]]
        vec = C
        for j in range(2, k + 2):
            acc = zero
            for i in range(k):
                acc = acc + R[i] * vec[i]
            t.append(zero - acc)
            if j < k + 1:
                vec = [_dot(A[i], vec, zero) for i in range(k)]
        new = [zero] * (k + 2)
        for i in range(k + 2):
            acc = zero
            for j in range(min(i, len(poly) - 1) + 1):
                if i - j < len(t):
                    acc = acc + t[i - j] * poly[j]
            new[i] = acc
        poly = new
    return poly


def _dot(row, vec, zero):
    acc = zero
    for a, b in zip(row, vec):
        acc = acc + a * b
    return acc


def _matmul(a, b, zero):
    n = len(a)
    return [[_dot(a[i], [b[k][j] for k in range(n)], zero) for j in range(n)] for i in range(n)]


class MolienData:
    """Per-class inverse series of det(1 - q * reflection_rep(rep)), to degree N."""

    def __init__(self, table: ElementTable, conj: ConjugacyData):
        datum = table.datum
        n = datum.rank
        ring = datum.ring
        zero = 0 if ring is None else ring.zero
        one = 1 if ring is None else ring.one
        gens = [datum.simple_reflection_matrix(i) for i in range(n)]
        self.N = datum.N
        self.series = []
        for c in conj.classes:
            mat = [[one if i == j else zero for j in range(n)] for i in range(n)]
            for s in table.word_of(c.rep_id):
                mat = _matmul(mat, gens[s], zero)
            cp = _berkowitz_charpoly(mat, zero, one)
            # det(1 - qM) has ascending coefficients equal to cp read descending
            d = list(cp) + [zero] * (self.N + 1 - len(cp))
            u = [one]
            for k in range(1, self.N + 1):
                acc = zero
                for j in range(1, min(k, len(d) - 1) + 1):
                    acc = acc + d[j] * u[k - j]
                u.append(zero - acc)
            self.series.append(u)
        self.conj = conj
        self.order = table.size


def b_invariant(molien: MolienData, chi: ClassFunction) -> int:
    """Smallest symmetric power of the reflection representation containing chi."""
    for k in range(molien.N + 1):
        acc = 0
        for c, val, u in zip(molien.conj.classes, chi.values, molien.series):
            acc = acc + c.size * val * u[k]
        if isinstance(acc, RingEl):
            m = _as_rational_int(acc.divide_exact(molien.order))
        else:
            q, r = divmod(acc, molien.order)
            if r:
                raise CoxcellsError("Molien coefficient is not an integer")
            m = q
        if m < 0:
            raise CoxcellsError("negative Molien coefficient")
        if m > 0:
            return k
    raise CoxcellsError("character does not appear in the coinvariant degrees (bug)")


# ---------------------------------------------------------------------------
# bundled tables


_BUNDLED = {
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "F4", "H3", "E6",
}


def character_table(table: ElementTable, conj: ConjugacyData) -> CharacterTable:
    """The character table for this group, bundled or closed-form."""
    t = table.datum.graph.type_name
    if t.startswith("I2("):
        return _i2_table(table, conj, int(t[3:-1]))
    if t == "A1":
        return _a1_table(table, conj)
    if t in _BUNDLED:
        text = resources.files("coxcells.data.character_tables").joinpath(f"{t}.json").read_text()
        return _load_table(json.loads(text), table, conj)
    raise TableMismatch(f"no bundled character table for type {t}")


def _load_table(doc: dict, table: ElementTable, conj: ConjugacyData) -> CharacterTable:
    if doc.get("format") != "coxcells-chartable":
        raise TableMismatch("unrecognized character table file")
    if doc["order"] != table.size:
        raise TableMismatch("character table order does not match the group")
    ring = table.datum.ring
    if doc.get("ring_m") is not None:
        if ring is None or ring.m != doc["ring_m"]:
            raise TableMismatch("character table ring does not match the group")

    # align stored classes with the group's class order via representative words
    perm = [-1] * len(conj.classes)
    for i, cls in enumerate(doc["classes"]):
        wid = table.id_from_word(cls["word"])
        j = conj.class_of[wid]
        if perm[j] != -1:
            raise TableMismatch("two stored classes map to one group class")
        if conj.classes[j].size != cls["size"]:
            raise TableMismatch("class size mismatch")
        perm[j] = i
    if -1 in perm:
        raise TableMismatch("stored classes do not cover the group's classes")

    def decode(v):
        if isinstance(v, list):
            return RingEl(ring, tuple(v))
        return v

    rows = []
    names = []
    degrees = []
    bs = []
    for irr in doc["irreducibles"]:
        names.append(irr["name"])
        degrees.append(irr["degree"])
        bs.append(irr["b"])
        vals = [decode(irr["values"][perm[j]]) for j in range(len(perm))]
        rows.append(ClassFunction(tuple(vals)))
    out = CharacterTable(doc["type"], tuple(names), tuple(degrees), tuple(rows), tuple(bs), ring)
    validate_character_table(table, conj, out)
    return out


def validate_character_table(table: ElementTable, conj: ConjugacyData, ct: CharacterTable):
    order = table.size
    k = len(conj.classes)
    if len(ct.names) != k:
        raise TableMismatch(f"{len(ct.names)} irreducibles for {k} classes")
    ident = conj.class_of[0]
    for name, deg, row in zip(ct.names, ct.degrees, ct.rows):
        if _as_rational_int(row.values[ident]) != deg:
            raise TableMismatch(f"degree column mismatch for {name}")
    for i in range(k):
        for j in range(i, k):
            got = inner_product(conj, ct.rows[i], ct.rows[j])
            if got != (1 if i == j else 0):
                raise TableMismatch(f"row orthonormality fails at ({ct.names[i]}, {ct.names[j]})")
    if sum(d * d for d in ct.degrees) != order:
        raise TableMismatch("sum of squared degrees does not equal the group order")


def _a1_table(table: ElementTable, conj: ConjugacyData) -> CharacterTable:
    # classes: {e}, {s}; irreducibles: trivial, sign
    rows = []
    vals_by_class = {0: 1, 1: 1}
    triv = ClassFunction(tuple(1 for _ in conj.classes))
    sgn = ClassFunction(tuple(1 if table.length[c.rep_id] % 2 == 0 else -1 for c in conj.classes))
    ct = CharacterTable("A1", ("1_0", "1_1"), (1, 1), (triv, sgn), (0, 1), None)
    validate_character_table(table, conj, ct)
    return ct


def _i2_table(table: ElementTable, conj: ConjugacyData, m: int) -> CharacterTable:
    """Closed-form dihedral table: linear characters plus (m-1)//2 planes."""
    ring = table.datum.ring
    rows = []
    names = []
    degrees = []

    def linear(es, et):
        vals = []
        for c in conj.classes:
            v = 1
            for s in table.word_of(c.rep_id):
                v *= es if s == 0 else et
            vals.append(v)
        return ClassFunction(tuple(vals))

    cands = [(1, 1), (-1, -1)] + ([(1, -1), (-1, 1)] if m % 2 == 0 else [])
    for es, et in cands:
        names.append(None)
        degrees.append(1)
        rows.append(linear(es, et))

    # two-dimensional characters: value 2*cos(2*pi*j*k/m) on the rotation (st)^k
    n2d = (m - 1) // 2 if m % 2 else m // 2 - 1
    for j in range(1, n2d + 1):
        vals = []
        for c in conj.classes:
            word = table.word_of(c.rep_id)
            if len(word) % 2 == 1:
                vals.append(ring.zero if ring is not None else 0)
                continue
            k = len(word) // 2  # minimal-length rep of a rotation class is (st)^k or (ts)^k
            if ring is None:
                # crystallographic rank-2 groups are handled by bundled tables
                raise TableMismatch("dihedral closed form needs the cyclotomic ring")
            vals.append(ring.two_cos(2 * j * k))
        names.append(None)
        degrees.append(2)
        rows.append(ClassFunction(tuple(vals)))

    molien = MolienData(table, conj)
    bs = [b_invariant(molien, r) for r in rows]
    names = _default_names(degrees, bs, rows)
    ct = CharacterTable(f"I2({m})", tuple(names), tuple(degrees), tuple(rows), tuple(bs), ring)
    validate_character_table(table, conj, ct)
    return ct


def _default_names(degrees, bs, rows) -> list[str]:
    """Names of the form '<degree>_<b>', primed on (rare) collisions."""
    order = sorted(range(len(degrees)), key=lambda i: (degrees[i], bs[i], _row_key(rows[i])))
    names = [None] * len(degrees)
    seen = {}
    for i in order:
        base = f"{degrees[i]}_{bs[i]}"
        n = seen.get(base, 0)
        seen[base] = n + 1
        names[i] = base + "'" * n
    return names


def _row_key(row: ClassFunction):
    out = []
    for v in row.values:
        if isinstance(v, RingEl):
            out.append(tuple(v.c))
        else:
            out.append((v,))
    return tuple(out)


# ---------------------------------------------------------------------------
# families and special representations


@dataclass(frozen=True)
class TwoSidedCellInfo:
    block: int
    a_value: int
    family: tuple[str, ...]
    special: str


def family_and_special(
    conj: ConjugacyData,
    ct: CharacterTable,
    left: CellPartition,
    two: CellPartition,
    a_values,
    cell_characters,
) -> list[TwoSidedCellInfo]:
    """Families Irr(W|F) and their unique special member with b = a.

    Also checks the left-cell count identity: the sum of special degrees
    equals the number of left cells.
    """
    nirr = len(ct.names)
    mult = [[0] * nirr for _ in range(len(left.blocks))]
    for bi, chi in enumerate(cell_characters):
        for ei in range(nirr):
            mult[bi][ei] = inner_product(conj, chi, ct.rows[ei])

    # regular-module decomposition: each E occurs dim E times in total
    for ei in range(nirr):
        got = sum(mult[bi][ei] for bi in range(len(left.blocks)))
        if got != ct.degrees[ei]:
            raise CoxcellsError(
                f"total multiplicity of {ct.names[ei]} is {got}, expected {ct.degrees[ei]}"
            )

    infos = []
    total_special_dim = 0
    for ti, blk in enumerate(two.blocks):
        fam = set()
        for w in blk:
            bi = left.block_of[w]
            for ei in range(nirr):
                if mult[bi][ei] > 0:
                    fam.add(ei)
        specials = [ei for ei in fam if ct.b_invariants[ei] == a_values[ti]]
        if len(specials) != 1:
            raise SpecialNotUnique(
                f"two-sided cell {ti} (a={a_values[ti]}) has specials "
                f"{[ct.names[e] for e in specials]}"
            )
        e0 = specials[0]
        total_special_dim += ct.degrees[e0]
        infos.append(
            TwoSidedCellInfo(
                block=ti,
                a_value=a_values[ti],
                family=tuple(sorted(ct.names[e] for e in fam)),
                special=ct.names[e0],
            )
        )
    if total_special_dim != len(left.blocks):
        raise CoxcellsError(
            f"sum of special degrees {total_special_dim} != number of left cells {len(left.blocks)}"
        )
    return infos


def advisory_b_minimality(ct: CharacterTable, infos) -> list[str]:
    """Flag (not fail) any family member with b below the special's b."""
    flags = []
    for info in infos:
        b0 = ct.b_invariants[ct.index_of(info.special)]
        for name in info.family:
            if ct.b_invariants[ct.index_of(name)] < b0:
                flags.append(f"family of {info.special}: member {name} has smaller b")
    return flags
