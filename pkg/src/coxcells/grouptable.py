"""Full enumeration of a finite Coxeter group with tabulated operations.

Elements get integer ids sorted by (length, root-permutation).  All group
operations used in hot loops (multiplication by generators on either side,
inverses, descent sets as bitmasks) are precomputed flat tables, so the
cell machinery never composes permutations after construction.

Tables are immutable once built and safe to share; every derived sequence
is ordered deterministically (by element id), independent of scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EnumerationBoundExceeded, NotInvolutionClass
from .rootdata import GroupElement, RootDatum

_FULL_SUPPORT_CACHE = {}


class ElementTable:
    """Tabulated element arithmetic for one enumerated group."""

    def __init__(self, datum: RootDatum):
        if datum.order > datum.enumeration_bound:
            raise EnumerationBoundExceeded(
                f"|W| = {datum.order} exceeds the enumeration bound {datum.enumeration_bound}"
            )
        self.datum = datum
        self.rank = datum.rank
        self.N = datum.N
        self._build()

    # -- construction ---------------------------------------------------------

    def _build(self):
        datum = self.datum
        n2 = 2 * self.N
        dtype = np.uint8 if n2 <= 255 else np.uint16
        gen = [np.array(p, dtype=dtype) for p in datum.generator_perms]

        levels = [np.array([datum.identity_perm()], dtype=dtype)]
        seen = {levels[0][0].tobytes()}
        while True:
            cur = levels[-1]
            fresh = {}
            for s in range(self.rank):
                asc = cur[:, s] < self.N  # l(ws) > l(w) iff w(alpha_s) > 0
                if not asc.any():
                    continue
                composed = cur[asc][:, gen[s]]
                for row in composed:
                    key = row.tobytes()
                    if key not in seen and key not in fresh:
                        fresh[key] = row
            if not fresh:
                break
            nxt = np.array([fresh[k] for k in sorted(fresh)], dtype=dtype)
            seen.update(fresh)
            levels.append(nxt)
            if sum(len(lv) for lv in levels) > datum.enumeration_bound:
                raise EnumerationBoundExceeded("enumeration exceeded the configured bound")

        self.perms = np.concatenate(levels)
        self.size = len(self.perms)
        assert self.size == datum.order, f"enumerated {self.size}, classification says {datum.order}"
        self.id_of = {row.tobytes(): i for i, row in enumerate(self.perms)}

        lengths = []
        for lv_idx, lv in enumerate(levels):
            lengths.extend([lv_idx] * len(lv))
        self.length = lengths
        self.np_length = np.array(lengths, dtype=np.int32)

        # inverse permutations -> inverse element ids
        inv_perms = np.empty_like(self.perms)
        rows = np.arange(self.size)[:, None]
        inv_perms[rows, self.perms.astype(np.int64)] = np.arange(n2, dtype=dtype)[None, :]
        self.inv = [self.id_of[row.tobytes()] for row in inv_perms]

        # descent bitmasks: s in R(w) iff perm[s] >= N; L(w) = R(w^{-1})
        rmask_bits = (self.perms[:, : self.rank] >= self.N).astype(np.int64)
        weights = (1 << np.arange(self.rank, dtype=np.int64))
        np_rmask = rmask_bits @ weights
        self.rmask = np_rmask.tolist()
        self.np_rmask = np_rmask
        np_lmask = np_rmask[self.inv]
        self.lmask = np_lmask.tolist()
        self.np_lmask = np_lmask

        # generator multiplication tables, flat [id * rank + s]
        rmul = np.empty((self.size, self.rank), dtype=np.int64)
        lmul = np.empty((self.size, self.rank), dtype=np.int64)
        for s in range(self.rank):
            comp_r = self.perms[:, gen[s]]
            comp_l = gen[s][self.perms.astype(np.int64)]
            rmul[:, s] = [self.id_of[row.tobytes()] for row in comp_r]
            lmul[:, s] = [self.id_of[row.tobytes()] for row in comp_l]
        self.rmul = rmul.reshape(-1).tolist()
        self.lmul = lmul.reshape(-1).tolist()
        self.np_lmul = lmul.reshape(-1)
        self.np_rmul = rmul.reshape(-1)

        # support masks via the greedy canonical word, one letter per element
        supp = [0] * self.size
        lmask = self.lmask
        lmul_flat = self.lmul
        r = self.rank
        for w in range(1, self.size):
            m = lmask[w]
            s = (m & -m).bit_length() - 1
            supp[w] = supp[lmul_flat[w * r + s]] | (1 << s)
        self.supp = supp
        self.np_supp = np.array(supp, dtype=np.int64)

        # length strata with aligned filter arrays
        self.strata = []
        start = 0
        for lv in levels:
            ids = np.arange(start, start + len(lv), dtype=np.int64)
            self.strata.append(
                {
                    "ids": ids,
                    "lmask": np_lmask[ids],
                    "rmask": np_rmask[ids],
                    "supp": self.np_supp[ids],
                }
            )
            start += len(lv)
        self.max_length = len(levels) - 1
        self.w0 = self.size - 1

        self._reflections = None
        self._refl_rmul = None
        self._words = {}

    # -- reflections and Bruhat covers ----------------------------------------

    def reflections(self) -> list[int]:
        """Ids of all N reflections (closure of the generators under conjugation)."""
        if self._reflections is None:
            out = set()
            queue = []
            for s in range(self.rank):
                t = self.rmul[s]  # e * s = the generator itself
                out.add(t)
                queue.append(t)
            while queue:
                t = queue.pop()
                for s in range(self.rank):
                    c = self.lmul[self.rmul[t * self.rank + s] * self.rank + s]
                    if c not in out:
                        out.add(c)
                        queue.append(c)
            refl = sorted(out)
            assert len(refl) == self.N
            self._reflections = refl
        return self._reflections

    def reflection_rmul(self) -> list[list[int]]:
        """For each reflection t (in reflections() order), the table w -> w*t."""
        if self._refl_rmul is None:
            tables = []
            for t in self.reflections():
                tperm = self.perms[t].astype(np.int64)
                composed = self.perms[:, tperm]
                tables.append([self.id_of[row.tobytes()] for row in composed])
            self._refl_rmul = tables
        return self._refl_rmul

    # -- element/id translation -------------------------------------------------

    def element(self, i: int) -> GroupElement:
        return GroupElement(tuple(int(x) for x in self.perms[i]))

    def id_of_element(self, w: GroupElement) -> int:
        key = np.array(w.perm, dtype=self.perms.dtype).tobytes()
        return self.id_of[key]

    def id_from_word(self, word) -> int:
        i = 0
        r = self.rank
        for s in word:
            i = self.rmul[i * r + s]
        return i

    def word_of(self, i: int) -> tuple[int, ...]:
        """Canonical (lex-smallest reduced) word, cached."""
        got = self._words.get(i)
        if got is None:
            out = []
            w = i
            lmask = self.lmask
            lmul = self.lmul
            r = self.rank
            while w:
                m = lmask[w]
                s = (m & -m).bit_length() - 1
                out.append(s)
                w = lmul[w * r + s]
            got = tuple(out)
            self._words[i] = got
        return got

    def mult_ids(self, a: int, b: int) -> int:
        """Product of two elements by id (walks b's canonical word)."""
        r = self.rank
        i = a
        for s in self.word_of(b):
            i = self.rmul[i * r + s]
        return i

    def bruhat_leq_ids(self, y: int, w: int) -> bool:
        length = self.length
        lmask = self.lmask
        lmul = self.lmul
        r = self.rank
        ly = length[y]
        lw = length[w]
        while lw > ly:
            m = lmask[w]
            s = (m & -m).bit_length() - 1
            w = lmul[w * r + s]
            lw -= 1
            if (lmask[y] >> s) & 1:
                y = lmul[y * r + s]
                ly -= 1
        return y == w

    def descents_right(self, i: int) -> frozenset[int]:
        m = self.rmask[i]
        return frozenset(s for s in range(self.rank) if (m >> s) & 1)

    def full_support_mask(self) -> int:
        return (1 << self.rank) - 1


# ---------------------------------------------------------------------------
# module-level operations in terms of the table


def enumerate_elements(datum: RootDatum):
    """Yield every element exactly once, weakly increasing in length."""
    table = ElementTable(datum)
    for i in range(table.size):
        yield table.element(i)


def min_coset_reps(table: ElementTable, I) -> list[int]:
    """X_I = {w : R(w) cap I is empty}, as ids in increasing (length, id) order."""
    imask = 0
    for s in I:
        imask |= 1 << s
    out = [w for w in range(table.size) if not (table.rmask[w] & imask)]
    return out


def project_parabolic(table: ElementTable, I, w: int) -> tuple[int, int]:
    """Write w = x*u with x in X_I and u in W_I; returns (x, u)."""
    imask = 0
    for s in I:
        imask |= 1 << s
    r = table.rank
    x = w
    suffix = []
    while table.rmask[x] & imask:
        m = table.rmask[x] & imask
        s = (m & -m).bit_length() - 1
        x = table.rmul[x * r + s]
        suffix.append(s)
    u = 0
    for s in reversed(suffix):
        u = table.rmul[u * r + s]
    return x, u


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class with its length and cuspidality data."""

    representative: GroupElement
    rep_id: int
    size: int
    element_order: int
    min_length: int
    cuspidal: bool
    ids: tuple[int, ...]
    min_ids: tuple[int, ...]


@dataclass(frozen=True)
class ConjugacyData:
    classes: tuple[ConjClass, ...]
    class_of: tuple[int, ...]
    involutions: tuple[int, ...]


def conjugacy_analysis(table: ElementTable) -> ConjugacyData:
    """Partition W into conjugacy classes by conjugation-orbit search.

    Class representatives are the first elements found in id order, hence of
    minimal length within their class.
    """
    n = table.size
    r = table.rank
    lmul = table.lmul
    rmul = table.rmul
    length = table.length
    supp = table.supp
    full = table.full_support_mask()

    class_of = [-1] * n
    classes = []
    for start in range(n):
        if class_of[start] >= 0:
            continue
        cid = len(classes)
        class_of[start] = cid
        orbit = [start]
        queue = [start]
        while queue:
            w = queue.pop()
            for s in range(r):
                c = lmul[rmul[w * r + s] * r + s]
                if class_of[c] < 0:
                    class_of[c] = cid
                    orbit.append(c)
                    queue.append(c)
        orbit.sort()
        dc = length[start]
        min_ids = tuple(w for w in orbit if length[w] == dc)
        cuspidal = all(supp[w] == full for w in orbit)
        classes.append(
            ConjClass(
                representative=table.element(start),
                rep_id=start,
                size=len(orbit),
                element_order=_perm_order(table.perms[start]),
                min_length=dc,
                cuspidal=cuspidal,
                ids=tuple(orbit),
                min_ids=min_ids,
            )
        )
    involutions = tuple(w for w in range(n) if table.inv[w] == w)
    assert sum(c.size for c in classes) == n
    return ConjugacyData(tuple(classes), tuple(class_of), involutions)


def involution_classes(conj: ConjugacyData) -> list[int]:
    """Indices of classes consisting of involutions (identity excluded)."""
    out = []
    for i, c in enumerate(conj.classes):
        if c.element_order == 2:
            out.append(i)
    return out


def require_involution_class(conj: ConjugacyData, idx: int) -> ConjClass:
    c = conj.classes[idx]
    if c.element_order not in (1, 2):
        raise NotInvolutionClass(f"class {idx} has element order {c.element_order}")
    return c


def _perm_order(perm) -> int:
    import math

    n = len(perm)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        c = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            c += 1
        order = order * c // math.gcd(order, c)
    return order
