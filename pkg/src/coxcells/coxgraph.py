"""Coxeter graphs: construction, classification and the group-spec grammar.

A graph is given by its symmetric Coxeter matrix m(s,t).  Finiteness is
equivalent to every connected component matching one of the classified
types A_n, B_n, D_n, E_6/7/8, F_4, H_3, H_4, I_2(m); classification also
fixes the group order and the number of positive roots without any
enumeration.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import NonFiniteType, UnsupportedType

_SPEC_RE = re.compile(r"^([ABDEFH])(\d+)$|^I2\((\d+)\)$")


@dataclass(frozen=True, eq=False)
class CoxeterGraph:
    """A finite-type Coxeter graph with classified components.

    ``components`` lists ``(type_name, nodes)`` per connected component,
    with nodes in the order used by the classification templates.
    """

    rank: int
    labels: tuple[str, ...]
    coxeter_matrix: tuple[tuple[int, ...], ...]
    type_name: str
    components: tuple[tuple[str, tuple[int, ...]], ...]

    @staticmethod
    def from_matrix(matrix) -> "CoxeterGraph":
        m = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(m)
        for i in range(n):
            if len(m[i]) != n or m[i][i] != 1:
                raise UnsupportedType("Coxeter matrix must be square with 1 on the diagonal")
            for j in range(n):
                if i != j and (m[i][j] != m[j][i] or m[i][j] < 2):
                    raise UnsupportedType("Coxeter matrix must be symmetric with m(s,t) >= 2 off-diagonal")
        comps = _classify(m)
        name = "x".join(t for t, _ in comps) if comps else "A0"
        labels = tuple(f"s{i}" for i in range(n))
        return CoxeterGraph(n, labels, m, name, comps)

    @staticmethod
    def from_spec(spec: str) -> "CoxeterGraph":
        """Build the canonical graph for a spec string like ``E6`` or ``I2(7)``."""
        return CoxeterGraph.from_matrix(coxeter_matrix_for_spec(spec))

    def m(self, s: int, t: int) -> int:
        return self.coxeter_matrix[s][t]

    @property
    def order(self) -> int:
        """Group order from the classification (no enumeration)."""
        total = 1
        for t, _ in self.components:
            total *= _component_order(t)
        return total

    @property
    def positive_roots(self) -> int:
        return sum(_component_roots(t) for t, _ in self.components)


def parse_group_spec(spec: str) -> CoxeterGraph:
    return CoxeterGraph.from_spec(spec)


def parabolic_index(graph: CoxeterGraph, I) -> int:
    """|W| / |W_I| from the classification orders; no enumeration needed.

    >>> g = CoxeterGraph.from_spec("E8")
    >>> parabolic_index(g, range(7))   # an E7 subdiagram
    240
    """
    I = sorted(set(I))
    sub = CoxeterGraph.from_matrix([[graph.coxeter_matrix[i][j] for j in I] for i in I])
    q, r = divmod(graph.order, sub.order)
    assert r == 0
    return q


def coxeter_matrix_for_spec(spec: str):
    spec = spec.strip()
    mt = _SPEC_RE.match(spec)
    if not mt:
        raise UnsupportedType(f"cannot parse group spec {spec!r}")
    if mt.group(3) is not None:
        m = int(mt.group(3))
        if m < 2:
            raise UnsupportedType("I2(m) needs m >= 2")
        return _rank2(m)
    family, n = mt.group(1), int(mt.group(2))
    if family == "A" and n >= 1:
        return _chain([3] * (n - 1))
    if family == "B" and n >= 2:
        return _chain([4] + [3] * (n - 2))
    if family == "D" and n >= 4:
        # nodes 0 and 1 are the fork, attached to node 2
        mat = [[2] * n for _ in range(n)]
        for i in range(n):
            mat[i][i] = 1
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        for i, j in edges:
            mat[i][j] = mat[j][i] = 3
        return mat
    if family == "E" and n in (6, 7, 8):
        mat = [[2] * n for _ in range(n)]
        for i in range(n):
            mat[i][i] = 1
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        for i, j in edges:
            mat[i][j] = mat[j][i] = 3
        return mat
    if family == "F" and n == 4:
        return _chain([3, 4, 3])
    if family == "H" and n in (3, 4):
        return _chain([5] + [3] * (n - 2))
    raise UnsupportedType(f"unsupported group spec {spec!r}")


def _chain(ms):
    n = len(ms) + 1
    mat = [[2] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 1
    for i, m in enumerate(ms):
        mat[i][i + 1] = mat[i + 1][i] = m
    return mat


def _rank2(m):
    return [[1, m], [m, 1]]


# ---------------------------------------------------------------------------
# classification


def _component_order(t: str) -> int:
    if t.startswith("I2("):
        return 2 * int(t[3:-1])
    family, n = t[0], int(t[1:])
    if family == "A":
        return math.factorial(n + 1)
    if family == "B":
        return (2**n) * math.factorial(n)
    if family == "D":
        return (2 ** (n - 1)) * math.factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}[t]


def _component_roots(t: str) -> int:
    if t.startswith("I2("):
        return int(t[3:-1])
    family, n = t[0], int(t[1:])
    if family == "A":
        return n * (n + 1) // 2
    if family == "B":
        return n * n
    if family == "D":
        return n * (n - 1)
    return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "H3": 15, "H4": 60}[t]


def _classify(m):
    """Classify all connected components, raising for non-finite graphs."""
    n = len(m)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        nodes = [start]
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j != i and m[i][j] >= 3 and not seen[j]:
                    seen[j] = True
                    nodes.append(j)
                    queue.append(j)
        t, order = _classify_component(m, sorted(nodes))
        if t is None:
            if _gram_positive_definite(m):
                raise UnsupportedType("finite Coxeter graph outside the supported classification")
            raise NonFiniteType("Coxeter graph is not of finite type (Gram matrix not positive definite)")
        comps.append((t, tuple(order)))
    comps.sort(key=lambda c: c[1][0] if c[1] else 0)
    return tuple(comps)


def _classify_component(m, nodes):
    r = len(nodes)
    if r == 1:
        return "A1", nodes
    if r == 2:
        i, j = nodes
        lab = m[i][j]
        if lab == 3:
            return "A2", nodes
        if lab == 4:
            return "B2", nodes
        return f"I2({lab})", nodes

    edges = [(i, j, m[i][j]) for i in nodes for j in nodes if i < j and m[i][j] >= 3]
    if len(edges) != r - 1:
        return None, None  # a cycle: affine or worse
    deg = {i: 0 for i in nodes}
    adj = {i: [] for i in nodes}
    for i, j, lab in edges:
        deg[i] += 1
        deg[j] += 1
        adj[i].append((j, lab))
        adj[j].append((i, lab))
    if max(deg.values()) > 3:
        return None, None
    branch = [i for i in nodes if deg[i] == 3]
    big = sorted(lab for _, _, lab in edges if lab > 3)

    if not branch:
        ends = [i for i in nodes if deg[i] == 1]
        path = [ends[0]]
        while len(path) < r:
            nxt = [j for j, _ in adj[path[-1]] if len(path) < 2 or j != path[-2]]
            path.append(nxt[0])
        labs = [m[path[i]][path[i + 1]] for i in range(r - 1)]
        if labs[0] > labs[-1]:
            path.reverse()
            labs.reverse()
        if big == []:
            return f"A{r}", path
        if big == [4]:
            if labs[-1] == 4:
                path.reverse()
                labs.reverse()
            if labs[0] == 4:
                return f"B{r}", path
            if r == 4 and labs == [3, 4, 3]:
                return "F4", path
            return None, None
        if big == [5]:
            if labs[-1] == 5:
                path.reverse()
                labs.reverse()
            if labs[0] == 5 and r in (3, 4):
                return f"H{r}", path
            return None, None
        return None, None

    if len(branch) > 1 or big:
        return None, None
    b = branch[0]
    arms = []
    for j, _ in adj[b]:
        arm = [j]
        prev = b
        while deg[arm[-1]] == 2:
            nxt = [k for k, _ in adj[arm[-1]] if k != prev]
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=len)
    la = [len(a) for a in arms]
    if la[0] == 1 and la[1] == 1:
        # D_n: fork nodes first, then the spine
        order = [arms[0][0], arms[1][0], b] + arms[2]
        return f"D{r}", order
    if la[:2] == [1, 2] and la[2] in (2, 3, 4):
        # E_n ordering: short arm node is 1, spine is 0-2-3-4-...
        order = [arms[1][1], arms[0][0], arms[1][0], b] + arms[2]
        return f"E{r}", order
    return None, None


def _gram_positive_definite(m) -> bool:
    """Float Cholesky test of the Gram matrix; used only to pick an error type."""
    n = len(m)
    g = [[-math.cos(math.pi / m[i][j]) if i != j else 1.0 for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = g[k][k]
        if pivot < 1e-9:
            return False
        for i in range(k + 1, n):
            f = g[i][k] / pivot
            for j in range(k, n):
                g[i][j] -= f * g[k][j]
    return True
