"""Kazhdan-Lusztig polynomials P_{y,w} and their mu-coefficients.

The recursion (for s with sw < w):

* P_{y,w} = P_{sy,w} if sy > y;
* P_{y,w} = P_{sy,sw} + v^2 P_{y,sw}
            - sum over {z : y <= z < sw, sz < z, mu(z,sw) != 0} of
              mu(z,sw) v^{l(w)-l(z)} P_{y,z}  if sy < y.

Polynomials are stored internally as tuples of coefficients in q = v^2
(only even powers of v occur).  The memo keeps one entry per normalized
pair; mu-lists per element are the durable product that the cell machinery
consumes, and the polynomial memo may optionally be flushed between length
strata to trade time for memory.

Concurrent use: entries are value-immutable and insertion is idempotent,
so identical results arise regardless of fill order; this implementation
is single-threaded and fills in deterministic id order.
"""

from __future__ import annotations

import json
import sys

import numpy as np

from .errors import CoxcellsError
from .grouptable import ElementTable
from .laurent import LaurentPoly
from .rootdata import GroupElement

_ONE = (1,)

if sys.getrecursionlimit() < 100_000:
    sys.setrecursionlimit(100_000)


class KLTable:
    """Memoized Kazhdan-Lusztig polynomial table over one enumerated group."""

    def __init__(self, table: ElementTable, flush_strata: bool = False):
        self.table = table
        self.flush_strata = flush_strata
        self._memo: dict[int, tuple[int, ...]] = {}
        self._mu: list[list[tuple[int, int]] | None] = [None] * table.size
        self._shift = max(1, (table.size - 1).bit_length())
        self._mu_complete = False

    # -- public operations -------------------------------------------------------

    def kl_polynomial(self, y, w) -> LaurentPoly:
        """P_{y,w} as a Laurent polynomial (a polynomial in v^2)."""
        yid = self._to_id(y)
        wid = self._to_id(w)
        if yid == wid:
            return LaurentPoly.one()
        t = self.table
        if t.length[yid] >= t.length[wid] or not t.bruhat_leq_ids(yid, wid):
            return LaurentPoly.zero()
        return LaurentPoly.from_q_coeffs(self._kl_q(yid, wid))

    def mu(self, y, w) -> int:
        """Coefficient of v^{l(w)-l(y)-1} in P_{y,w}; 0 unless y < w with odd length gap."""
        yid = self._to_id(y)
        wid = self._to_id(w)
        t = self.table
        diff = t.length[wid] - t.length[yid]
        if diff <= 0 or diff % 2 == 0:
            return 0
        if not t.bruhat_leq_ids(yid, wid):
            return 0
        if diff == 1:
            return 1
        p = self._kl_q(yid, wid)
        top = (diff - 1) >> 1
        return p[top] if len(p) == top + 1 else 0

    def mu_list(self, w: int) -> list[tuple[int, int]]:
        """All (y, mu(y,w)) with y < w and mu nonzero, sorted by y."""
        got = self._mu[w]
        if got is not None:
            return got
        t = self.table
        length = t.length
        lw = length[w]
        lst = []
        # length-difference-one pairs are exactly the Bruhat covers, all mu = 1
        refl_rmul = t.reflection_rmul()
        target = lw - 1
        for tab in refl_rmul:
            y = tab[w]
            if length[y] == target:
                lst.append((y, 1))
        # deeper mu require both-sided descent-superset (extremal) pairs
        wl = t.lmask[w]
        wr = t.rmask[w]
        ws = t.supp[w]
        cand = []
        for ly in range(lw - 3, -1, -2):
            st = t.strata[ly]
            sel = (
                ((st["lmask"] & wl) == wl)
                & ((st["rmask"] & wr) == wr)
                & ((st["supp"] & ws) == st["supp"])
            )
            if sel.any():
                cand.append(st["ids"][sel])
        if cand:
            for y in self._bruhat_below_w(np.concatenate(cand), w):
                top = (lw - length[y] - 1) >> 1
                p = self._kl_q(y, w)
                if len(p) == top + 1:
                    lst.append((y, p[top]))
        lst.sort()
        self._mu[w] = lst
        return lst

    def _bruhat_below_w(self, ys: "np.ndarray", w: int) -> list[int]:
        """Filter candidate ids to those Bruhat-below w (vectorized descent walk).

        The descent chosen at each step depends only on the current upper
        element, so every candidate is walked down simultaneously.
        """
        t = self.table
        np_lmul = t.np_lmul
        np_lmask64 = t.np_lmask
        lmask = t.lmask
        lmul = t.lmul
        r = t.rank
        cur = ys
        while w:
            m = lmask[w]
            s = (m & -m).bit_length() - 1
            bit = np_lmask64[cur] >> s & 1
            cur = np.where(bit == 1, np_lmul[cur * r + s], cur)
            w = lmul[w * r + s]
        return ys[cur == 0].tolist()

    def bulk_mu(self, progress=None) -> None:
        """Fill mu-lists for every element, in increasing length order."""
        if self._mu_complete:
            return
        t = self.table
        flush_at = -1
        for w in range(t.size):
            if self.flush_strata and t.length[w] > flush_at:
                # keep only polynomials that later strata can still reach cheaply;
                # dropping everything is correct, later queries recompute
                flush_at = t.length[w]
                self._memo.clear()
            self.mu_list(w)
            if progress is not None and w % 4096 == 0:
                progress(w, t.size)
        self._mu_complete = True

    def mu_edge_count(self) -> int:
        return sum(len(m) for m in self._mu if m is not None)

    # -- internals -----------------------------------------------------------------

    def _to_id(self, x) -> int:
        if isinstance(x, GroupElement):
            return self.table.id_of_element(x)
        return int(x)

    def _kl_q(self, y: int, w: int) -> tuple[int, ...]:
        """P_{y,w} in q-coefficients; requires y <= w and l(y) < l(w)."""
        t = self.table
        length = t.length
        lmask = t.lmask
        lmul = t.lmul
        r = t.rank

        # raise y through the left descents of w (P unchanged)
        mw = lmask[w]
        free = mw & ~lmask[y]
        while free:
            s = (free & -free).bit_length() - 1
            y = lmul[y * r + s]
            if y == w:
                return _ONE
            free = mw & ~lmask[y]

        key = (w << self._shift) | y
        memo = self._memo
        got = memo.get(key)
        if got is not None:
            return got

        lw = length[w]
        ly = length[y]
        if lw - ly <= 2:
            memo[key] = _ONE
            return _ONE

        s = (mw & -mw).bit_length() - 1
        sw = lmul[w * r + s]
        sy = lmul[y * r + s]

        res = list(self._kl_q(sy, sw))
        if t.bruhat_leq_ids(y, sw):
            b = self._kl_q(y, sw)
            need = len(b) + 1
            if len(res) < need:
                res.extend([0] * (need - len(res)))
            for i, c in enumerate(b):
                res[i + 1] += c
        bruhat = t.bruhat_leq_ids
        for z, m in self.mu_list(sw):
            if not ((lmask[z] >> s) & 1):
                continue
            if z == y:
                pz = _ONE
            else:
                if length[z] <= ly or not bruhat(y, z):
                    continue
                pz = self._kl_q(y, z)
            shift = (lw - length[z]) >> 1
            need = shift + len(pz)
            if len(res) < need:
                res.extend([0] * (need - len(res)))
            for i, c in enumerate(pz):
                res[shift + i] -= m * c
        while res and res[-1] == 0:
            res.pop()
        if not res or res[0] != 1 or len(res) - 1 > (lw - ly - 1) >> 1:
            raise CoxcellsError(
                f"KL recursion produced an invalid polynomial for pair ({y}, {w}): {res}"
            )
        out = tuple(res)
        memo[key] = out
        return out


# ---------------------------------------------------------------------------
# on-disk mu cache

MU_CACHE_FORMAT = "coxcells-mu-cache"
MU_CACHE_VERSION = 1


def save_mu_cache(klt: KLTable, group_spec: str, path) -> None:
    """Write all computed mu-values as canonical-word pairs (bit-exact round trip)."""
    klt.bulk_mu()
    t = klt.table
    entries = []
    for w in range(t.size):
        ww = list(t.word_of(w))
        for y, m in klt.mu_list(w):
            entries.append([list(t.word_of(y)), ww, m])
    doc = {
        "format": MU_CACHE_FORMAT,
        "version": MU_CACHE_VERSION,
        "group": group_spec,
        "entries": entries,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, separators=(",", ":"), sort_keys=True)


def load_mu_cache(path, group_spec: str, table: ElementTable) -> KLTable:
    """Load a mu-cache into a fresh KLTable (polynomial memo stays empty)."""
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != MU_CACHE_FORMAT or doc.get("version") != MU_CACHE_VERSION:
        raise CoxcellsError("unrecognized mu-cache file format")
    if doc.get("group") != group_spec:
        raise CoxcellsError(
            f"mu-cache is for group {doc.get('group')!r}, requested {group_spec!r}"
        )
    klt = KLTable(table)
    lists: list[list[tuple[int, int]]] = [[] for _ in range(table.size)]
    for yw, ww, m in doc["entries"]:
        lists[table.id_from_word(ww)].append((table.id_from_word(yw), int(m)))
    for w in range(table.size):
        lists[w].sort()
        klt._mu[w] = lists[w]
    klt._mu_complete = True
    return klt
