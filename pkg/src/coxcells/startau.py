"""Star operations, strings, star orbits and generalized tau-invariants.

For a generator pair (s,t) with m(s,t) = 3, the star operation is the
involution of D_R(s,t) = {w : exactly one of s,t is a right descent}
exchanging ws and wt; for m(s,t) >= 3 the string operation w -> w~ flips
the position of w^{-1} inside its (s,t)-string.  Iterated refinement of
the right-descent partition under these maps yields the tau-partition
(simply-laced mode uses stars, strings mode uses the string flip).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellPartition
from .errors import BadOrder, CellNotInDomain, NotInDomain
from .grouptable import ElementTable


def _pair_mask(s: int, t: int) -> int:
    return (1 << s) | (1 << t)


def in_star_domain(table: ElementTable, w: int, s: int, t: int) -> bool:
    m = table.rmask[w] & _pair_mask(s, t)
    return m != 0 and m != _pair_mask(s, t)


def star(table: ElementTable, w: int, s: int, t: int) -> int:
    """The star involution w -> w* for a pair with m(s,t) = 3."""
    if table.datum.graph.m(s, t) != 3:
        raise BadOrder(f"star operation needs m(s,t) = 3, got {table.datum.graph.m(s, t)}")
    if not in_star_domain(table, w, s, t):
        raise NotInDomain(f"element {w} is not in D_R({s},{t})")
    r = table.rank
    ws = table.rmul[w * r + s]
    wt = table.rmul[w * r + t]
    a = in_star_domain(table, ws, s, t)
    b = in_star_domain(table, wt, s, t)
    assert a != b, "exactly one of ws, wt must lie in the domain"
    return ws if a else wt


def string_position(table: ElementTable, w: int, s: int, t: int):
    """The (s,t)-string through w^{-1} and its (1-based) position in it.

    The coset W_{s,t} * w^{-1} splits into the minimal element x, the maximal
    element, and the two strings (sx, tsx, ...), (tx, stx, ...) of m-1
    elements each.
    """
    m = table.datum.graph.m(s, t)
    if m < 3:
        raise BadOrder(f"string operation needs m(s,t) >= 3, got {m}")
    if not in_star_domain(table, w, s, t):
        raise NotInDomain(f"element {w} is not in D_R({s},{t})")
    r = table.rank
    pm = _pair_mask(s, t)
    wi = table.inv[w]
    x = wi
    while table.lmask[x] & pm:
        g = table.lmask[x] & pm
        g0 = (g & -g).bit_length() - 1
        x = table.lmul[x * r + g0]
    strings = []
    for first, second in ((s, t), (t, s)):
        seq = []
        cur = x
        let = first
        for _ in range(m - 1):
            cur = table.lmul[cur * r + let]
            seq.append(cur)
            let = second if let == first else first
        strings.append(seq)
    for seq in strings:
        if wi in seq:
            return seq, seq.index(wi) + 1
    raise NotInDomain("element unexpectedly outside both strings")


def string_tilde(table: ElementTable, w: int, s: int, t: int) -> int:
    """The string involution w -> w~ (position i maps to m - i)."""
    m = table.datum.graph.m(s, t)
    seq, i = string_position(table, w, s, t)
    return table.inv[seq[m - i - 1]]


def _star_pairs(table: ElementTable):
    g = table.datum.graph
    return [
        (s, t)
        for s in range(table.rank)
        for t in range(s + 1, table.rank)
        if g.m(s, t) == 3
    ]


def _string_pairs(table: ElementTable):
    g = table.datum.graph
    return [
        (s, t)
        for s in range(table.rank)
        for t in range(s + 1, table.rank)
        if g.m(s, t) >= 3
    ]


def star_orbits(table: ElementTable, w: int, side: str = "right") -> frozenset[int]:
    """Closure of {w} under all star operations (right side), or the
    inverse-conjugated version (left side)."""
    pairs = _star_pairs(table)
    if side == "left":
        seed = table.inv[w]
    elif side == "right":
        seed = w
    else:
        raise ValueError("side must be 'right' or 'left'")
    seen = {seed}
    queue = [seed]
    while queue:
        x = queue.pop()
        for s, t in pairs:
            if in_star_domain(table, x, s, t):
                y = star(table, x, s, t)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    if side == "left":
        return frozenset(table.inv[x] for x in seen)
    return frozenset(seen)


# ---------------------------------------------------------------------------
# tau partitions


@dataclass(frozen=True)
class TauPartition:
    mode: str  # "simply_laced" | "strings"
    blocks: tuple[tuple[int, ...], ...]
    block_of: dict
    rounds: int

    def __len__(self):
        return len(self.blocks)

    def export(self, table: ElementTable) -> dict:
        return {
            "mode": self.mode,
            "rounds": self.rounds,
            "blocks": [[list(table.word_of(w)) for w in b] for b in self.blocks],
        }


def tau_partition(table: ElementTable, elements=None, mode: str = "simply_laced") -> TauPartition:
    """Fixpoint refinement of the right-descent partition under star/string maps.

    Elements need not be closed under the operations: images outside the
    working set are bucketed by their (frozen) right descent set, which can
    only under-refine, never wrongly split.
    """
    if mode == "simply_laced":
        pairs = _star_pairs(table)
        op = star
    elif mode == "strings":
        pairs = _string_pairs(table)
        op = string_tilde
    else:
        raise ValueError("mode must be 'simply_laced' or 'strings'")

    if elements is None:
        els = list(range(table.size))
        member = None
    else:
        els = sorted(elements)
        member = set(els)

    rmask = table.rmask
    block_of = {w: rmask[w] for w in els}
    # precompute images; applicability is constant on descent classes
    images = {}
    for w in els:
        images[w] = [op(table, w, s, t) if in_star_domain(table, w, s, t) else -1 for s, t in pairs]

    rounds = 0
    nblocks = len(set(block_of.values()))
    while True:
        rounds += 1
        sigs = {}
        for w in els:
            img = images[w]
            sig = (
                block_of[w],
                tuple(
                    -1
                    if im < 0
                    else (
                        block_of[im]
                        if member is None or im in member
                        else ("ext", rmask[im])
                    )
                    for im in img
                ),
            )
            sigs.setdefault(sig, []).append(w)
        if len(sigs) == nblocks:
            break
        nblocks = len(sigs)
        new_ids = {}
        for sig in sorted(sigs, key=lambda g: (str(g),)):
            new_ids[sig] = len(new_ids)
        for sig, ws in sigs.items():
            bid = new_ids[sig]
            for w in ws:
                block_of[w] = bid
        if rounds > len(els) + 1:
            raise RuntimeError("tau refinement failed to stabilize (bug)")

    groups = {}
    for w in els:
        groups.setdefault(block_of[w], []).append(w)
    blocks = sorted((sorted(g) for g in groups.values()), key=lambda b: b[0])
    final = {}
    out_blocks = []
    for i, b in enumerate(blocks):
        out_blocks.append(tuple(b))
        for w in b:
            final[w] = i
    return TauPartition(mode, tuple(out_blocks), final, rounds)


# ---------------------------------------------------------------------------
# cells under star operations


def cell_star_image(table: ElementTable, cell, s: int, t: int, partition: CellPartition | None = None):
    """The image of a whole left cell under the (s,t) star operation."""
    cell = tuple(sorted(cell))
    for w in cell:
        if not in_star_domain(table, w, s, t):
            raise CellNotInDomain(f"cell not contained in D_R({s},{t})")
    img = tuple(sorted(star(table, w, s, t) for w in cell))
    if partition is not None:
        b = partition.block_of[img[0]]
        if tuple(partition.blocks[b]) != img:
            raise CellNotInDomain("star image is not a block of the given partition (bug)")
    return img


@dataclass(frozen=True)
class StarOrbitsOfCells:
    """Orbit structure of the left cells under all star operations."""

    orbit_of: tuple[int, ...]  # per left-cell block index
    representatives: tuple[int, ...]  # one block index per orbit


def star_class_representatives(table: ElementTable, left: CellPartition) -> StarOrbitsOfCells:
    """Pick one representative cell per star orbit of left cells.

    The representative is the orbit's cell containing the lexicographically
    smallest canonical word.
    """
    pairs = _star_pairs(table)
    nb = len(left.blocks)
    orbit_of = [-1] * nb
    orbits = []
    for b0 in range(nb):
        if orbit_of[b0] >= 0:
            continue
        oid = len(orbits)
        comp = [b0]
        orbit_of[b0] = oid
        queue = [b0]
        while queue:
            b = queue.pop()
            rep = left.blocks[b][0]
            for s, t in pairs:
                if in_star_domain(table, rep, s, t):
                    img = star(table, rep, s, t)
                    nb2 = left.block_of[img]
                    if orbit_of[nb2] < 0:
                        orbit_of[nb2] = oid
                        comp.append(nb2)
                        queue.append(nb2)
        orbits.append(comp)

    reps = []
    for comp in orbits:
        best = None
        bestw = None
        for b in comp:
            w = min(table.word_of(x) for x in left.blocks[b])
            if bestw is None or w < bestw:
                bestw = w
                best = b
        reps.append(best)
    return StarOrbitsOfCells(tuple(orbit_of), tuple(reps))
