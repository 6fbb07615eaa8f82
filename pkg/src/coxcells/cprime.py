"""Products in the canonical basis and the brute-force a-value oracle.

C'_s C'_w = (v + v^{-1}) C'_w                                if sw < w,
C'_s C'_w = C'_{sw} + sum_{z : sz < z < w} mu(z,w) C'_z      if sw > w.

The oracle computes every structure constant h_{x,y,z} of the canonical
basis on a small group and reads off a(z) as the maximal v-degree over all
(x,y); it exists purely to cross-validate the trace-based a-values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OracleScaleExceeded
from .grouptable import ElementTable
from .kl import KLTable
from .laurent import LaurentPoly
from .rootdata import GroupElement

_V_PLUS_VINV = LaurentPoly({1: 1, -1: 1})


@dataclass(frozen=True)
class CPrimeCombination:
    """A finite A-linear combination of canonical basis elements, keyed by id."""

    terms: tuple[tuple[int, LaurentPoly], ...]

    @staticmethod
    def from_dict(d: dict) -> "CPrimeCombination":
        return CPrimeCombination(tuple(sorted((k, v) for k, v in d.items() if not v.is_zero())))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @staticmethod
    def basis_element(i: int) -> "CPrimeCombination":
        return CPrimeCombination(((i, LaurentPoly.one()),))


def cprime_times_generator(
    table: ElementTable, klt: KLTable, s: int, x: CPrimeCombination
) -> CPrimeCombination:
    """Left-multiply a canonical-basis combination by C'_s."""
    r = table.rank
    out: dict[int, LaurentPoly] = {}

    def add(i, p):
        cur = out.get(i)
        cur = p if cur is None else cur + p
        if cur.is_zero():
            out.pop(i, None)
        else:
            out[i] = cur

    for w, coeff in x.terms:
        if (table.lmask[w] >> s) & 1:
            add(w, coeff * _V_PLUS_VINV)
        else:
            add(table.lmul[w * r + s], coeff)
            for z, m in klt.mu_list(w):
                if (table.lmask[z] >> s) & 1:
                    add(z, coeff * m)
    return CPrimeCombination.from_dict(out)


def cprime_t_expansion(table: ElementTable, klt: KLTable, w: int) -> dict[int, LaurentPoly]:
    """C'_w in the standard basis: sum_y v^{l(y)-l(w)} P_{y,w} T_y."""
    lw = table.length[w]
    out = {w: LaurentPoly.one()}
    for y in range(table.size):
        if table.length[y] < lw and table.bruhat_leq_ids(y, w):
            p = klt.kl_polynomial(y, w)
            out[y] = p.shifted(table.length[y] - lw)
    return out


class StructureConstantOracle:
    """All products C'_x C'_y expanded in the canonical basis, brute force."""

    SCALE_LIMIT = 2000

    def __init__(self, table: ElementTable, klt: KLTable | None = None):
        if table.size > self.SCALE_LIMIT:
            raise OracleScaleExceeded(
                f"|W| = {table.size} exceeds the oracle scale limit {self.SCALE_LIMIT}"
            )
        self.table = table
        self.klt = klt if klt is not None else KLTable(table)
        self._max_deg: list[int] | None = None

    def max_h_degree(self, z) -> int:
        """max over x, y of deg_v h_{x,y,z}."""
        if self._max_deg is None:
            self._fill()
        zid = self.table.id_of_element(z) if isinstance(z, GroupElement) else int(z)
        return self._max_deg[zid]

    def _fill(self):
        t = self.table
        klt = self.klt
        n = t.size
        r = t.rank
        best = [None] * n
        # for fixed y, build C'_x C'_y over all x by length induction on x:
        # C'_{sx} C'_y = C'_s (C'_x C'_y) - sum_{z < x, sz < z} mu(z,x) C'_z C'_y
        for y in range(n):
            prods: list[dict[int, LaurentPoly] | None] = [None] * n
            prods[0] = {y: LaurentPoly.one()}
            for x in range(1, n):
                m = t.lmask[x]
                s = (m & -m).bit_length() - 1
                x1 = t.lmul[x * r + s]  # x = s * x1 with l(x1) = l(x) - 1
                base = cprime_times_generator(
                    t, klt, s, CPrimeCombination.from_dict(prods[x1])
                ).as_dict()
                for z, mu in klt.mu_list(x1):
                    if (t.lmask[z] >> s) & 1:
                        pz = prods[z]
                        for k, coeff in pz.items():
                            cur = base.get(k)
                            cur = (-mu) * coeff if cur is None else cur - mu * coeff
                            if cur.is_zero():
                                base.pop(k, None)
                            else:
                                base[k] = cur
                prods[x] = base
            for p in prods:
                for z, coeff in p.items():
                    d = coeff.degree
                    if best[z] is None or d > best[z]:
                        best[z] = d
        assert all(b is not None and b >= 0 for b in best)
        self._max_deg = best


def structure_constant_a_oracle(table: ElementTable, z, klt: KLTable | None = None) -> int:
    """Brute-force a(z) as the maximal h-constant degree (tiny groups only)."""
    return StructureConstantOracle(table, klt).max_h_degree(z)
