"""Exact root-permutation realization of a finite Coxeter group.

Every group element is stored as a permutation of the 2N roots (N positive
followed by their negatives, root i+N = -(root i)).  Lengths, descent sets
and the Bruhat order then come from constant-time index tests instead of
word combinatorics.  Root coordinates are integers for crystallographic
components and Z[2*cos(pi/m)] elements otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxgraph import CoxeterGraph
from .errors import IndexOutOfRange, UnsupportedType
from .rings import RealCyclotomicRing, RingEl


@dataclass(frozen=True, eq=False)
class RootDatum:
    """A Coxeter graph together with its exact root system realization."""

    graph: CoxeterGraph
    N: int
    ring: RealCyclotomicRing | None
    roots: tuple[tuple, ...]
    generator_perms: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple, ...]
    order: int
    enumeration_bound: int

    @property
    def rank(self) -> int:
        return self.graph.rank

    def identity_perm(self) -> tuple[int, ...]:
        return tuple(range(2 * self.N))

    def simple_reflection_matrix(self, i: int):
        """Matrix of s_i on the simple-root basis (columns are images)."""
        n = self.rank
        one = 1 if self.ring is None else self.ring.one
        zero = 0 if self.ring is None else self.ring.zero
        mat = [[one if a == b else zero for b in range(n)] for a in range(n)]
        for j in range(n):
            mat[i][j] = (1 if i == j else 0) - self.cartan[j][i]
            if self.ring is not None and not isinstance(mat[i][j], RingEl):
                mat[i][j] = self.ring.from_int(mat[i][j])
        return mat


@dataclass(frozen=True)
class GroupElement:
    """A group element as a signed-root permutation."""

    perm: tuple[int, ...]

    def __len__(self):
        return len(self.perm)


def build_group(graph: CoxeterGraph, enumeration_bound: int = 1_000_000) -> RootDatum:
    """Construct the exact root datum for a finite-type Coxeter graph."""
    n = graph.rank
    ring = _pick_ring(graph)
    cartan = _cartan_matrix(graph, ring)
    zero = 0 if ring is None else ring.zero
    one = 1 if ring is None else ring.one

    simples = []
    for i in range(n):
        v = [zero] * n
        v[i] = one
        simples.append(tuple(v))

    index: dict[tuple, int] = {r: i for i, r in enumerate(simples)}
    pos: list[tuple] = list(simples)
    i = 0
    while i < len(pos):
        beta = pos[i]
        for s in range(n):
            img = _reflect(beta, s, cartan, zero)
            if img not in index and not _is_negative_simple(img, s, simples):
                index[img] = len(pos)
                pos.append(img)
        i += 1
    N = len(pos)
    if N != graph.positive_roots:
        raise UnsupportedType(
            f"root closure produced {N} positive roots, expected {graph.positive_roots}"
        )

    perms = []
    for s in range(n):
        p = [0] * (2 * N)
        for j, beta in enumerate(pos):
            if j == s:
                p[j] = j + N
            else:
                p[j] = index[_reflect(beta, s, cartan, zero)]
            p[j + N] = (p[j] + N) % (2 * N)
        perms.append(tuple(p))

    roots = tuple(pos) + tuple(tuple(-c for c in r) for r in pos)
    datum = RootDatum(
        graph=graph,
        N=N,
        ring=ring,
        roots=roots,
        generator_perms=tuple(perms),
        cartan=cartan,
        order=graph.order,
        enumeration_bound=enumeration_bound,
    )
    for s, p in enumerate(perms):
        assert all(p[p[i]] == i for i in range(2 * N)), "generator permutation not an involution"
        assert sum(1 for i in range(N) if p[i] >= N) == 1
    return datum


def build_group_from_spec(spec: str, enumeration_bound: int = 1_000_000) -> RootDatum:
    return build_group(CoxeterGraph.from_spec(spec), enumeration_bound)


def _pick_ring(graph: CoxeterGraph) -> RealCyclotomicRing | None:
    needs = set()
    for t, _ in graph.components:
        if t.startswith("H"):
            needs.add(5)
        elif t.startswith("I2("):
            needs.add(int(t[3:-1]))
    if not needs:
        return None
    if len(needs) > 1:
        raise UnsupportedType("products mixing distinct non-crystallographic rings are unsupported")
    return RealCyclotomicRing(needs.pop())


def _cartan_matrix(graph: CoxeterGraph, ring: RealCyclotomicRing | None):
    """Pairing c[j][i] with s_i(a_j) = a_j - c[j][i] * a_i."""
    n = graph.rank
    m = graph.coxeter_matrix
    asym = {}
    for t, nodes in graph.components:
        if t[0] in "ABDEF":
            if t[0] == "B":
                # nodes[0]-nodes[1] is the 4-edge; make a_{nodes[0]} the long root
                asym[(nodes[0], nodes[1])] = -1
                asym[(nodes[1], nodes[0])] = -2
            elif t == "F4":
                asym[(nodes[1], nodes[2])] = -1
                asym[(nodes[2], nodes[1])] = -2
    cartan = []
    for j in range(n):
        row = []
        for i in range(n):
            if i == j:
                row.append(2)
            elif m[i][j] == 2:
                row.append(0)
            elif (j, i) in asym:
                row.append(asym[(j, i)])
            elif m[i][j] == 3:
                row.append(-1)
            else:
                # non-crystallographic bond: -2*cos(pi/m(s,t)) in the shared ring
                if ring is None or m[i][j] != ring.m:
                    raise UnsupportedType(f"bond order {m[i][j]} has no exact coefficient in the chosen ring")
                row.append(-ring.two_cos(1))
        cartan.append(row)
    return tuple(tuple(r) for r in cartan)


def _reflect(beta: tuple, i: int, cartan, zero):
    pairing = zero
    for j, b in enumerate(beta):
        if isinstance(b, RingEl) or b != 0:
            c = cartan[j][i]
            if isinstance(c, int) and c == 0:
                continue
            pairing = pairing + b * c
    out = list(beta)
    out[i] = out[i] - pairing
    return tuple(out)


def _is_negative_simple(img: tuple, s: int, simples) -> bool:
    neg = tuple(-c for c in simples[s])
    return img == neg


# ---------------------------------------------------------------------------
# element-level operations (no enumeration required)


def word_to_element(datum: RootDatum, word) -> GroupElement:
    """Compose generator permutations; the empty word is the identity."""
    n = datum.rank
    acc = list(datum.identity_perm())
    for s in word:
        if not 0 <= s < n:
            raise IndexOutOfRange(f"generator index {s} out of range for rank {n}")
        p = datum.generator_perms[s]
        acc = [acc[p[i]] for i in range(len(acc))]
    return GroupElement(tuple(acc))


def multiply(datum: RootDatum, a: GroupElement, b: GroupElement) -> GroupElement:
    pa, pb = a.perm, b.perm
    return GroupElement(tuple(pa[pb[i]] for i in range(len(pa))))


def inverse(datum: RootDatum, a: GroupElement) -> GroupElement:
    p = a.perm
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return GroupElement(tuple(out))


def length_of(datum: RootDatum, w: GroupElement) -> int:
    N = datum.N
    return sum(1 for i in range(N) if w.perm[i] >= N)


def right_descents(datum: RootDatum, w: GroupElement) -> frozenset[int]:
    N = datum.N
    return frozenset(s for s in range(datum.rank) if w.perm[s] >= N)


def left_descents(datum: RootDatum, w: GroupElement) -> frozenset[int]:
    return right_descents(datum, inverse(datum, w))


def length_and_descents(datum: RootDatum, w: GroupElement):
    """Return (l(w), R(w), L(w))."""
    return length_of(datum, w), right_descents(datum, w), left_descents(datum, w)


def canonical_word(datum: RootDatum, w: GroupElement) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for w.

    Greedy: repeatedly take the smallest s with l(s*x) < l(x) as the next
    letter and continue with s*x.
    """
    N = datum.N
    perm = list(w.perm)
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    word = []
    while True:
        s = next((t for t in range(datum.rank) if inv[t] >= N), None)
        if s is None:
            break
        word.append(s)
        p = datum.generator_perms[s]
        perm = [p[perm[i]] for i in range(len(perm))]
        inv = [inv[p[i]] for i in range(len(inv))]
    return tuple(word)


def bruhat_leq(datum: RootDatum, y: GroupElement, w: GroupElement) -> bool:
    """Bruhat-Chevalley order test by the descent recursion.

    Pick s with s*w < w; recurse on (s*y, s*w) if s*y < y, else on (y, s*w).
    """
    N = datum.N
    perms = datum.generator_perms

    py = list(y.perm)
    iy = [0] * len(py)
    for i, v in enumerate(py):
        iy[v] = i
    pw = list(w.perm)
    iw = [0] * len(pw)
    for i, v in enumerate(pw):
        iw[v] = i
    ly = sum(1 for i in range(N) if py[i] >= N)
    lw = sum(1 for i in range(N) if pw[i] >= N)

    while lw > ly:
        s = next(t for t in range(datum.rank) if iw[t] >= N)
        p = perms[s]
        pw = [p[pw[i]] for i in range(len(pw))]
        iw = [iw[p[i]] for i in range(len(iw))]
        lw -= 1
        if iy[s] >= N:
            py = [p[py[i]] for i in range(len(py))]
            iy = [iy[p[i]] for i in range(len(iy))]
            ly -= 1
    return py == pw
