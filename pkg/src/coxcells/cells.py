"""Cell partitions, W-graph cell modules and their numerical invariants.

Left cells are the strongly connected components of the mu-graph, where
y <-L w holds iff y = sw > w for some s, or y < w with mu(y,w) != 0.  Any
edge lying on a cycle joins elements with equal right descent sets, so the
SCC computation runs on the subgraph of descent-respecting edges; the full
edge set is still used for the preorder between cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CellWithMultipleDistinguished,
    CellWithoutDistinguished,
    CoxcellsError,
)
from .grouptable import ConjugacyData, ElementTable
from .kl import KLTable
from .laurent import LaurentPoly

_FLOAT_GUARD = float(2**52)


@dataclass(frozen=True)
class CellPartition:
    """A partition of the element set into cells of one side."""

    side: str  # "left" | "right" | "twosided"
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    a_values: tuple[int, ...] | None = None
    specials: tuple[str, ...] | None = None

    def __len__(self):
        return len(self.blocks)

    def block_containing(self, i: int) -> tuple[int, ...]:
        return self.blocks[self.block_of[i]]

    def with_metadata(self, a_values, specials) -> "CellPartition":
        return CellPartition(
            self.side, self.blocks, self.block_of, tuple(a_values), tuple(specials)
        )

    def export(self, table: ElementTable) -> dict:
        out = {"side": self.side, "blocks": []}
        for i, b in enumerate(self.blocks):
            blk = {"elements": [list(table.word_of(w)) for w in b]}
            if self.a_values is not None:
                blk["a"] = self.a_values[i]
            if self.specials is not None:
                blk["special"] = self.specials[i]
            out["blocks"].append(blk)
        return out


def _normalize_blocks(size, comp_of) -> CellPartition | tuple:
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(comp_of):
        groups.setdefault(c, []).append(i)
    blocks = sorted((sorted(g) for g in groups.values()), key=lambda b: b[0])
    block_of = [0] * size
    for bi, b in enumerate(blocks):
        for w in b:
            block_of[w] = bi
    return tuple(tuple(b) for b in blocks), tuple(block_of)


def mu_graph_edges(table: ElementTable, klt: KLTable, w: int, respect_descents: bool):
    """Out-neighbours {y : y <-L w} of w, optionally restricted to R(y) = R(w).

    A mu-coupling y < w only yields C'_y inside C'_s * C'_w when sy < y and
    sw > w for some s, so mu-edges additionally require a left descent of y
    that is not one of w.
    """
    r = table.rank
    length = table.length
    rmask = table.rmask
    lmask = table.lmask
    lw = length[w]
    rw = rmask[w]
    mw = lmask[w]
    out = []
    for s in range(r):
        sw = table.lmul[w * r + s]
        if length[sw] > lw and (not respect_descents or rmask[sw] == rw):
            out.append(sw)
    for y, _m in klt.mu_list(w):
        if lmask[y] & ~mw and (not respect_descents or rmask[y] == rw):
            out.append(y)
    return out


def left_cells(table: ElementTable, klt: KLTable) -> CellPartition:
    """Left cells as SCCs of the mu-graph (descent-respecting subgraph)."""
    klt.bulk_mu()
    n = table.size
    adj = [mu_graph_edges(table, klt, w, True) for w in range(n)]
    comp_of = _scc(adj)
    blocks, block_of = _normalize_blocks(n, comp_of)
    part = CellPartition("left", blocks, block_of)
    rmask = table.rmask
    for b in blocks:
        m = rmask[b[0]]
        if any(rmask[w] != m for w in b):
            raise CoxcellsError("left cell without constant right descent set (bug)")
    return part


def _scc(adj) -> list[int]:
    """Iterative Tarjan; returns component index per vertex."""
    n = len(adj)
    index = [0] * n
    low = [0] * n
    on_stack = bytearray(n)
    comp = [-1] * n
    stack: list[int] = []
    counter = 1
    ncomp = 0
    for root in range(n):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            recurse = False
            edges = adj[v]
            while pi < len(edges):
                u = edges[pi]
                pi += 1
                if not index[u]:
                    work[-1] = (v, pi)
                    work.append((u, 0))
                    recurse = True
                    break
                if on_stack[u] and index[u] < low[v]:
                    low[v] = index[u]
            if recurse:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on_stack[u] = 0
                    comp[u] = ncomp
                    if u == v:
                        break
                ncomp += 1
            if work:
                pv = work[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
    return comp


def right_and_two_sided_cells(
    table: ElementTable, klt: KLTable, left: CellPartition
) -> tuple[CellPartition, CellPartition]:
    """Right cells by inversion, two-sided cells as components of the union."""
    n = table.size
    inv = table.inv
    right_of = [0] * n
    for w in range(n):
        right_of[w] = left.block_of[inv[w]]
    rblocks, rblock_of = _normalize_blocks(n, right_of)
    right = CellPartition("right", rblocks, rblock_of)

    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for part in (left, right):
        for b in part.blocks:
            for w in b[1:]:
                union(b[0], w)
    comp_of = [find(w) for w in range(n)]
    tblocks, tblock_of = _normalize_blocks(n, comp_of)
    two = CellPartition("twosided", tblocks, tblock_of)
    return right, two


def verify_ordering_property(table: ElementTable, klt: KLTable, left: CellPartition, two: CellPartition):
    """Check that distinct left cells in one two-sided cell are <=_L incomparable.

    Returns the list of violating cell pairs (expected empty for every finite
    group; failure would signal a computation bug).
    """
    nb = len(left.blocks)
    succ = [set() for _ in range(nb)]
    for w in range(table.size):
        bw = left.block_of[w]
        for y in mu_graph_edges(table, klt, w, False):
            by = left.block_of[y]
            if by != bw:
                succ[bw].add(by)
    # reachability over the condensation DAG, in topological (post) order
    reach: list[frozenset | None] = [None] * nb
    for root in range(nb):
        if reach[root] is not None:
            continue
        stack = [(root, iter(succ[root]))]
        on_path = {root}
        while stack:
            b, it = stack[-1]
            advanced = False
            for c in it:
                if reach[c] is None:
                    if c in on_path:
                        raise CoxcellsError("cycle in the cell condensation (bug)")
                    stack.append((c, iter(succ[c])))
                    on_path.add(c)
                    advanced = True
                    break
            if not advanced:
                out = set()
                for c in succ[b]:
                    out.add(c)
                    out |= reach[c]
                reach[b] = frozenset(out)
                on_path.discard(b)
                stack.pop()

    bad = []
    for b in range(nb):
        for c in reach[b]:
            if two.block_of[left.blocks[c][0]] == two.block_of[left.blocks[b][0]] and b != c:
                bad.append((b, c))
    return bad


# ---------------------------------------------------------------------------
# W-graph cell modules


@dataclass(frozen=True)
class WGraphModule:
    """The Hecke-module structure carried by one left cell.

    Basis is the cell in increasing id order.  T_s acts by -v^{-1} on basis
    vectors with s in L(x), and by v plus mu-couplings into such vectors
    otherwise.
    """

    ids: tuple[int, ...]
    index: dict = field(hash=False, compare=False, default=None)
    lmask: tuple[int, ...] = ()
    couplings: tuple[tuple[int, int, int], ...] = ()  # (i, j, mu~) with i,j basis positions
    rank: int = 0

    @property
    def dimension(self) -> int:
        return len(self.ids)

    def ts_matrix_at_one(self, s: int) -> np.ndarray:
        """The action of T_s specialized at v = 1 (float64, exact integers)."""
        d = self.dimension
        m = np.zeros((d, d))
        for i in range(d):
            m[i, i] = -1.0 if (self.lmask[i] >> s) & 1 else 1.0
        for i, j, mu in self.couplings:
            # coupling runs from ascent column j into descent row i
            if (self.lmask[i] >> s) & 1 and not (self.lmask[j] >> s) & 1:
                m[i, j] += mu
            if (self.lmask[j] >> s) & 1 and not (self.lmask[i] >> s) & 1:
                m[j, i] += mu
        return m

    def ts_action_parts(self, s: int):
        """(descent_rows, ascent_rows, coupling matrix) for the generic action."""
        d = self.dimension
        desc = [i for i in range(d) if (self.lmask[i] >> s) & 1]
        asc = [i for i in range(d) if not (self.lmask[i] >> s) & 1]
        c = np.zeros((d, d))
        for i, j, mu in self.couplings:
            if (self.lmask[i] >> s) & 1 and not (self.lmask[j] >> s) & 1:
                c[i, j] += mu
            if (self.lmask[j] >> s) & 1 and not (self.lmask[i] >> s) & 1:
                c[j, i] += mu
        return desc, asc, c


def cell_module(table: ElementTable, klt: KLTable, block) -> WGraphModule:
    ids = tuple(sorted(block))
    index = {w: i for i, w in enumerate(ids)}
    lmask = tuple(table.lmask[w] for w in ids)
    coup = []
    for w in ids:
        j = index[w]
        for y, m in klt.mu_list(w):
            i = index.get(y)
            if i is not None:
                coup.append((i, j, m))  # mu~(y, w) with y < w, symmetric value
    return WGraphModule(ids=ids, index=index, lmask=lmask, couplings=tuple(coup), rank=table.rank)


@dataclass(frozen=True)
class ClassFunction:
    """Rational-valued function on the conjugacy classes, in class order."""

    values: tuple

    def __len__(self):
        return len(self.values)


def _exact_trace(m: np.ndarray) -> int:
    tr = float(np.trace(m))
    if abs(tr) >= _FLOAT_GUARD or abs(m).max() >= _FLOAT_GUARD:
        raise CoxcellsError("float64 exactness guard tripped in trace computation")
    assert tr == int(tr)
    return int(tr)


def cell_character(table: ElementTable, module: WGraphModule, conj: ConjugacyData) -> ClassFunction:
    """Character of the v -> 1 specialization, on minimal-length class reps."""
    vals = []
    d = module.dimension
    mats = [module.ts_matrix_at_one(s) for s in range(table.rank)]
    for c in conj.classes:
        word = table.word_of(c.rep_id)
        m = np.eye(d)
        for s in word:
            m = m @ mats[s]
            if abs(m).max() >= _FLOAT_GUARD:
                raise CoxcellsError("float64 exactness guard tripped in cell character")
        vals.append(_exact_trace(m))
    return ClassFunction(tuple(vals))


def hecke_cell_trace(table: ElementTable, module: WGraphModule, w) -> LaurentPoly:
    """Trace of T_w on the generic cell module, as a Laurent polynomial in v."""
    wid = table.id_of_element(w) if hasattr(w, "perm") else int(w)
    word = table.word_of(wid)
    prod = _hecke_word_product(module, word)
    d = module.dimension
    lw = len(word)
    tr = prod[np.arange(d), np.arange(d), :].sum(axis=0)
    if abs(tr).max() >= _FLOAT_GUARD:
        raise CoxcellsError("float64 exactness guard tripped in Hecke trace")
    return LaurentPoly({e - lw: int(c) for e, c in enumerate(tr) if c})


def _hecke_word_product(module: WGraphModule, word) -> np.ndarray:
    """Product of generic T_s matrices along the word, exponents -l..l."""
    d = module.dimension
    lw = len(word)
    win = 2 * lw + 1
    x = np.zeros((d, d, win))
    x[np.arange(d), np.arange(d), lw] = 1.0
    for s in word:
        desc, asc, c = module.ts_action_parts(s)
        nxt = np.zeros_like(x)
        if desc:
            nxt[:, desc, :-1] -= x[:, desc, 1:]  # multiply column by -v^{-1}
        if asc:
            nxt[:, asc, 1:] += x[:, asc, :-1]  # multiply column by v
            cc = c[np.ix_(desc, asc)]
            if desc and cc.any():
                add = (
                    x[:, desc, :].transpose(0, 2, 1).reshape(d * win, len(desc)) @ cc
                ).reshape(d, win, len(asc)).transpose(0, 2, 1)
                nxt[:, asc, :] += add
        if abs(nxt).max() >= _FLOAT_GUARD:
            raise CoxcellsError("float64 exactness guard tripped in Hecke word product")
        x = nxt
    return x


def quadratic_and_braid_check(module: WGraphModule, graph_matrix) -> bool:
    """Verify (T_s - v)(T_s + v^{-1}) = 0 and the braid relations generically.

    Both sides are expanded with exact window arithmetic; intended for small
    cells in tests.
    """
    d = module.dimension
    r = module.rank
    for s in range(r):
        for t in range(s + 1, r):
            m = graph_matrix[s][t]
            w1 = _hecke_word_product(module, ([s, t] * m)[:m])
            w2 = _hecke_word_product(module, ([t, s] * m)[:m])
            if not np.array_equal(w1, w2):
                return False
    for s in range(r):
        sq = _hecke_word_product(module, [s, s])  # exponents -2..2
        lin = _hecke_word_product(module, [s])  # exponents -1..1
        # T_s^2 = 1 + (v - v^{-1}) T_s
        expect = np.zeros_like(sq)
        expect[np.arange(d), np.arange(d), 2] = 1.0
        expect[:, :, 2:5] += lin
        expect[:, :, 0:3] -= lin
        if not np.array_equal(sq, expect):
            return False
    return True


# ---------------------------------------------------------------------------
# a-values


def a_value_of_two_sided_cell(
    table: ElementTable,
    klt: KLTable,
    two_block,
    left: CellPartition,
) -> int:
    """Lusztig's a-value of a two-sided cell via generic traces.

    Uses the smallest left cell inside the block; the a-value is the largest
    i such that v^i * trace(T_w) has no negative powers left, maximized over
    the cell (a non-cancelling element always exists).
    """
    members = sorted({left.block_of[w] for w in two_block})
    blk = min((left.blocks[b] for b in members), key=lambda b: (len(b), b[0]))
    module = cell_module(table, klt, blk)
    best = 0
    for w in blk:
        tr = hecke_cell_trace(table, module, w)
        if not tr.is_zero():
            val = -tr.valuation
            if val > best:
                best = val
    return best


def a_values_for_partition(
    table: ElementTable, klt: KLTable, left: CellPartition, two: CellPartition
) -> tuple[int, ...]:
    return tuple(
        a_value_of_two_sided_cell(table, klt, blk, left) for blk in two.blocks
    )


def distinguished_involutions(
    table: ElementTable,
    klt: KLTable,
    left: CellPartition,
    a_of_element,
) -> tuple[int, ...]:
    """Involutions d with l(d) - 2*deg_q P_{e,d} = a(d); one per left cell."""
    out = []
    for d in range(table.size):
        if table.inv[d] != d:
            continue
        p = klt.kl_polynomial(0, d) if d else LaurentPoly.one()
        degq = (p.degree // 2) if not p.is_zero() else 0
        if table.length[d] - 2 * degq == a_of_element(d):
            out.append(d)
    counts = {}
    for d in out:
        b = left.block_of[d]
        counts[b] = counts.get(b, 0) + 1
    for b in range(len(left.blocks)):
        c = counts.get(b, 0)
        if c == 0:
            raise CellWithoutDistinguished(f"left cell {b} has no distinguished involution")
        if c > 1:
            raise CellWithMultipleDistinguished(
                f"left cell {b} has {c} distinguished involutions"
            )
    return tuple(out)
