"""Conjecture checkers, the type-A RSK oracle, and intersection tables.

Every checker returns a machine-readable report dict with a top-level
``pass`` flag and minimal witnesses on failure; nothing raises on a
mathematical counterexample, only on inconsistent inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellPartition, ClassFunction
from .chartable import inner_product
from .errors import NotInvolutionClass
from .grouptable import ConjugacyData, ElementTable
from .session import CoxeterGroup
from .startau import tau_partition


# ---------------------------------------------------------------------------
# involution modules


def involution_module_character(
    table: ElementTable, conj: ConjugacyData, class_index: int
) -> ClassFunction:
    """Character of the signed conjugation action on one involution class.

    The generator s sends the basis vector of w to -itself when sw = ws with
    l(sw) < l(w), and to the basis vector of sws otherwise.
    """
    cls = conj.classes[class_index]
    if cls.element_order not in (1, 2):
        raise NotInvolutionClass(f"class {class_index} has element order {cls.element_order}")
    members = set(cls.ids)
    r = table.rank
    lmul = table.lmul
    rmul = table.rmul
    length = table.length
    vals = []
    for c in conj.classes:
        word = table.word_of(c.rep_id)
        tr = 0
        for w in cls.ids:
            x = w
            sign = 1
            for s in reversed(word):
                sx = lmul[x * r + s]
                xs = rmul[x * r + s]
                if sx == xs and length[sx] < length[x]:
                    sign = -sign
                else:
                    x = lmul[xs * r + s]  # s * x * s
            if x == w:
                tr += sign
        vals.append(tr)
    assert vals[conj.class_of[0]] == cls.size
    return ClassFunction(tuple(vals))


def check_kottwitz(group: CoxeterGroup) -> dict:
    """dim Hom(V_C, [Gamma]_1) = |C cap Gamma| for all involution classes/cells."""
    table = group.table
    conj = group.conjugacy
    left = group.left_cells
    chars = group.cell_characters
    failures = []
    checked = 0
    for ci, cls in enumerate(conj.classes):
        if cls.element_order not in (1, 2):
            continue
        chi_v = involution_module_character(table, conj, ci)
        members = set(cls.ids)
        # aggregate identities first
        total_dim = sum(inner_product(conj, chi_v, chi) for chi in chars)
        assert total_dim == cls.size, "involution module does not decompose regularly"
        for bi, blk in enumerate(left.blocks):
            dim_hom = inner_product(conj, chi_v, chars[bi])
            inter = sum(1 for w in blk if w in members)
            checked += 1
            if dim_hom != inter:
                failures.append(
                    {
                        "class": ci,
                        "cell": bi,
                        "dim_hom": dim_hom,
                        "intersection": inter,
                    }
                )
    return {
        "check": "kottwitz",
        "group": group.spec,
        "pairs_checked": checked,
        "pass": not failures,
        "failures": failures,
    }


def check_left_connected(group: CoxeterGroup) -> dict:
    """Every left cell connected under x -> sx moves inside the cell."""
    table = group.table
    left = group.left_cells
    r = table.rank
    lmul = table.lmul
    failures = []
    for bi, blk in enumerate(left.blocks):
        members = set(blk)
        seen = {blk[0]}
        queue = [blk[0]]
        while queue:
            x = queue.pop()
            for s in range(r):
                y = lmul[x * r + s]
                if y in members and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != len(blk):
            failures.append({"cell": bi, "size": len(blk), "reached": len(seen)})
    return {
        "check": "left-connected",
        "group": group.spec,
        "cells": len(left.blocks),
        "pass": not failures,
        "failures": failures,
    }


def check_tilde_tau(group: CoxeterGroup) -> dict:
    """Same left cell iff same a-value and same string-mode tau class."""
    table = group.table
    left = group.left_cells
    tau = tau_partition(table, mode="strings")
    refined = {}
    for w in range(table.size):
        refined.setdefault((tau.block_of[w], group.a_of_element(w)), []).append(w)
    blocks = {tuple(sorted(g)) for g in refined.values()}
    cells = {tuple(b) for b in left.blocks}
    missing = sorted(blocks - cells)
    extra = sorted(cells - blocks)
    failures = []
    for b in missing[:5]:
        failures.append({"tau_a_block_size": len(b), "first": list(table.word_of(b[0]))})
    return {
        "check": "tilde-tau",
        "group": group.spec,
        "tau_blocks": len(tau.blocks),
        "refined_blocks": len(blocks),
        "cells": len(cells),
        "pass": blocks == cells,
        "failures": failures,
        "unmatched_cells": len(extra),
    }


# ---------------------------------------------------------------------------
# RSK oracle for type A


def rsk_insert(seq):
    """Row insertion; returns (P, Q) as tuples of tuples."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(seq, start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([x])
                q.append([step])
                break
            r = p[row]
            pos = None
            for i, y in enumerate(r):
                if y > x:
                    pos = i
                    break
            if pos is None:
                r.append(x)
                q[row].append(step)
                break
            r[pos], x = x, r[pos]
            row += 1
    return tuple(tuple(r) for r in p), tuple(tuple(r) for r in q)


def rsk_inverse(p, q):
    """Invert row insertion (round-trip check)."""
    p = [list(r) for r in p]
    q = [list(r) for r in q]
    n = sum(len(r) for r in p)
    out = []
    for step in range(n, 0, -1):
        row = next(i for i, r in enumerate(q) if r and r[-1] == step)
        q[row].pop()
        x = p[row].pop()
        for i in range(row - 1, -1, -1):
            r = p[i]
            j = max(k for k, y in enumerate(r) if y < x)
            r[j], x = x, r[j]
        out.append(x)
    return tuple(reversed(out))


def standard_tableaux_count(n: int) -> int:
    """Number of standard Young tableaux with n cells (hook length formula)."""
    import math

    def partitions(k, cap=None):
        if cap is None:
            cap = k
        if k == 0:
            yield ()
            return
        for first in range(min(k, cap), 0, -1):
            for rest in partitions(k - first, first):
                yield (first,) + rest

    total = 0
    for lam in partitions(n):
        hooks = 1
        for i, row in enumerate(lam):
            for j in range(row):
                arm = row - j - 1
                leg = sum(1 for r in lam[i + 1 :] if r > j)
                hooks *= arm + leg + 1
        total += math.factorial(n) // hooks
    return total


def permutation_of_element(table: ElementTable, w: int, n: int):
    """One-line form of w in the symmetric group on n letters."""
    vec = list(range(1, n + 1))
    for s in reversed(table.word_of(w)):
        vec[s], vec[s + 1] = vec[s + 1], vec[s]
    return tuple(vec)


def rsk_check(n: int) -> dict:
    """Left cells of the symmetric group vs common recording tableaux."""
    from .errors import OracleScaleExceeded

    if not 2 <= n <= 7:
        raise OracleScaleExceeded(f"rsk check supports 2 <= n <= 7, got {n}")
    group = CoxeterGroup.from_spec(f"A{n-1}")
    table = group.table
    left = group.left_cells

    perms = [permutation_of_element(table, w, n) for w in range(table.size)]
    pq = [rsk_insert(p) for p in perms]
    # round trip
    for p0, (pt, qt) in zip(perms, pq):
        assert rsk_inverse(pt, qt) == p0

    by_p = {}
    by_q = {}
    for w, (pt, qt) in enumerate(pq):
        by_p.setdefault(pt, []).append(w)
        by_q.setdefault(qt, []).append(w)
    cells = {tuple(b) for b in left.blocks}
    p_match = {tuple(sorted(g)) for g in by_p.values()} == cells
    q_match = {tuple(sorted(g)) for g in by_q.values()} == cells
    count_ok = len(left.blocks) == standard_tableaux_count(n)
    return {
        "check": "rsk",
        "group": f"A{n-1}",
        "n": n,
        "cells": len(left.blocks),
        "tableau_count": standard_tableaux_count(n),
        "pass": (p_match or q_match) and count_ok,
        "matching_tableau": "P" if p_match else ("Q" if q_match else None),
    }


# ---------------------------------------------------------------------------
# cuspidal intersections


@dataclass(frozen=True)
class IntersectionRow:
    class_index: int
    class_name: str
    element_order: int
    min_length: int
    min_size: int
    counts: tuple[tuple[str, int], ...]  # (special name, |C_min cap F|)


@dataclass(frozen=True)
class IntersectionTable:
    group: str
    rows: tuple[IntersectionRow, ...]

    def export(self) -> dict:
        return {
            "group": self.group,
            "rows": [
                {
                    "class": r.class_name,
                    "order": r.element_order,
                    "d_C": r.min_length,
                    "min_size": r.min_size,
                    "counts": {k: v for k, v in r.counts},
                }
                for r in self.rows
            ],
        }


def cuspidal_intersections(group: CoxeterGroup, cuspidal_only: bool = True) -> IntersectionTable:
    """|C_min cap F_{E_0}| per special representation, one row per class."""
    table = group.table
    conj = group.conjugacy
    two = group.two_sided_cells
    info_by_block = {i.block: i for i in group.two_sided_info}
    rows = []
    for ci, cls in enumerate(conj.classes):
        if cuspidal_only and not cls.cuspidal:
            continue
        counts: dict[str, int] = {}
        for w in cls.min_ids:
            sp = info_by_block[two.block_of[w]].special
            counts[sp] = counts.get(sp, 0) + 1
        assert sum(counts.values()) == len(cls.min_ids)
        name = f"C{ci}[o{cls.element_order},l{cls.min_length}]"
        rows.append(
            IntersectionRow(
                class_index=ci,
                class_name=name,
                element_order=cls.element_order,
                min_length=cls.min_length,
                min_size=len(cls.min_ids),
                counts=tuple(sorted(counts.items())),
            )
        )
    return IntersectionTable(group.spec, tuple(rows))
