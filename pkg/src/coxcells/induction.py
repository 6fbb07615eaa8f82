"""Parabolic induction of cells, star-closure reconstruction and cell lookup.

A left cell Γ of a parabolic subgroup W_I induces the set X_I Γ in W (a
union of left cells); tau-refining these pieces, splitting by a-values
where needed, and closing under star operations reconstructs the full left
cell partition from a small set of representative cells.  Every emitted
block is re-verified against the directly computed partition whenever the
group is small enough, which is always the case at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellPartition
from .coxgraph import CoxeterGraph
from .errors import IncompleteClosure, IndexMiss, VerificationMismatch
from .grouptable import ElementTable, min_coset_reps, project_parabolic
from .startau import (
    TauPartition,
    _star_pairs,
    cell_star_image,
    in_star_domain,
    star,
    star_orbits,
    tau_partition,
)


@dataclass(frozen=True)
class ParabolicEmbedding:
    """A standalone group for W_I together with the letter map into W."""

    I: tuple[int, ...]
    graph: CoxeterGraph

    def word_to_ambient(self, word):
        return tuple(self.I[s] for s in word)


def parabolic_subgraph(table: ElementTable, I) -> ParabolicEmbedding:
    I = tuple(sorted(I))
    m = table.datum.graph.coxeter_matrix
    sub = [[m[i][j] for j in I] for i in I]
    return ParabolicEmbedding(I, CoxeterGraph.from_matrix(sub))


def embed_ids(table: ElementTable, emb: ParabolicEmbedding, sub_table: ElementTable):
    """Map each W_I element id to its id in W (via canonical words)."""
    out = []
    for u in range(sub_table.size):
        out.append(table.id_from_word(emb.word_to_ambient(sub_table.word_of(u))))
    return out


@dataclass(frozen=True)
class InducedPiece:
    """X_I * Gamma for one left cell Gamma of W_I, with its tau refinement."""

    I: tuple[int, ...]
    source_cell: tuple[int, ...]  # ids in the subgroup's table
    elements: tuple[int, ...]  # ids in W
    tau_blocks: TauPartition


def induce_cell(
    table: ElementTable,
    I,
    sub_table: ElementTable,
    sub_cell,
    ambient_of_sub=None,
    tau_mode: str = "simply_laced",
) -> InducedPiece:
    I = tuple(sorted(I))
    if ambient_of_sub is None:
        emb = parabolic_subgraph(table, I)
        ambient_of_sub = embed_ids(table, emb, sub_table)
    xi = min_coset_reps(table, I)
    r = table.rank
    cell_in_ambient = {ambient_of_sub[v] for v in sub_cell}
    elements = []
    for u in sub_cell:
        word = table.word_of(ambient_of_sub[u])
        for x in xi:
            w = x
            for s in word:
                w = table.rmul[w * r + s]
            elements.append(w)
    assert len(set(elements)) == len(xi) * len(sub_cell)
    for w in elements:
        _x, u = project_parabolic(table, I, w)
        assert u in cell_in_ambient, "pr_I left the source cell (bug)"
    tau = tau_partition(table, elements, mode=tau_mode)
    return InducedPiece(I, tuple(sorted(sub_cell)), tuple(sorted(elements)), tau)


@dataclass(frozen=True)
class UpsilonData:
    """Union of the tau-refined induced pieces over representative cells of W_I."""

    I: tuple[int, ...]
    pieces: tuple[InducedPiece, ...]

    @property
    def elements(self) -> tuple[int, ...]:
        out = []
        for p in self.pieces:
            out.extend(p.elements)
        return tuple(sorted(out))

    @property
    def blocks(self):
        out = []
        for p in self.pieces:
            out.extend(p.tau_blocks.blocks)
        return out


def upsilon(
    table: ElementTable,
    I,
    sub_table: ElementTable,
    sub_left: CellPartition,
    sub_reps,
    tau_mode: str = "simply_laced",
) -> UpsilonData:
    """Induce each representative cell of W_I and tau-refine the pieces."""
    I = tuple(sorted(I))
    emb = parabolic_subgraph(table, I)
    amb = embed_ids(table, emb, sub_table)
    pieces = []
    for b in sub_reps:
        pieces.append(
            induce_cell(table, I, sub_table, sub_left.blocks[b], amb, tau_mode)
        )
    return UpsilonData(I, tuple(pieces))


def decompose_piece(
    table: ElementTable,
    piece: InducedPiece,
    distinguished: frozenset[int],
    a_of_element,
    verify_against: CellPartition | None = None,
):
    """Split each tau-block of a piece into left cells.

    Blocks meeting the distinguished involutions exactly once are cells;
    other blocks split by a-values, computed per left star orbit from one
    representative (preferring involutions).  Every emitted block is checked
    against the directly computed partition when one is supplied.
    """
    out = []
    for blk in piece.tau_blocks.blocks:
        hits = [w for w in blk if w in distinguished]
        if len(hits) == 1:
            emitted = [tuple(sorted(blk))]
        else:
            a_of = {}
            rest = set(blk)
            while rest:
                w = min(rest)
                orbit = star_orbits(table, w, "left") & set(blk)
                invs = [x for x in orbit if table.inv[x] == x]
                rep = min(invs) if invs else w
                a = a_of_element(rep)
                for x in orbit:
                    a_of[x] = a
                rest -= orbit
            groups = {}
            for w in blk:
                groups.setdefault(a_of[w], []).append(w)
            emitted = [tuple(sorted(g)) for _a, g in sorted(groups.items())]
        for cell in emitted:
            if verify_against is not None:
                b = verify_against.block_of[cell[0]]
                if tuple(verify_against.blocks[b]) != cell:
                    raise VerificationMismatch(
                        f"emitted block of size {len(cell)} (first element "
                        f"{table.word_of(cell[0])}) is not a left cell"
                    )
            out.append(cell)
    return out


def reconstruct_all_left_cells(table: ElementTable, rep_cells) -> CellPartition:
    """Closure of representative cells under star operations; partitions W."""
    pairs = _star_pairs(table)
    seen = {}
    queue = []
    for cell in rep_cells:
        key = tuple(sorted(cell))
        if key not in seen:
            seen[key] = True
            queue.append(key)
    while queue:
        cell = queue.pop()
        rep = cell[0]
        for s, t in pairs:
            if in_star_domain(table, rep, s, t):
                img = tuple(sorted(star(table, w, s, t) for w in cell))
                if img not in seen:
                    seen[img] = True
                    queue.append(img)
    blocks = sorted(seen, key=lambda b: b[0])
    block_of = [-1] * table.size
    for i, b in enumerate(blocks):
        for w in b:
            if block_of[w] != -1:
                raise IncompleteClosure("star closure produced overlapping cells (bug)")
            block_of[w] = i
    if -1 in block_of:
        missing = block_of.count(-1)
        raise IncompleteClosure(f"star closure misses {missing} elements of W")
    return CellPartition("left", tuple(blocks), tuple(block_of))


# ---------------------------------------------------------------------------
# element -> cell lookup


@dataclass(frozen=True)
class CellLookupIndex:
    """Representative cells with two-sided metadata, for star-path lookup."""

    rep_cells: tuple[tuple[int, ...], ...]
    a_values: tuple[int, ...]
    specials: tuple[str, ...]
    member_of: dict  # element id -> rep index


def build_lookup_index(rep_cells, a_values, specials) -> CellLookupIndex:
    member = {}
    for i, cell in enumerate(rep_cells):
        for w in cell:
            member[w] = i
    return CellLookupIndex(
        tuple(tuple(sorted(c)) for c in rep_cells),
        tuple(a_values),
        tuple(specials),
        member,
    )


LIBRARY_FORMAT = "coxcells-cell-library"


def save_cell_library(
    table: ElementTable,
    index: CellLookupIndex,
    families,
    group_spec: str,
    directory,
) -> None:
    """One JSON file per representative cell plus a hashed manifest."""
    import hashlib
    import json
    from pathlib import Path

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    files = []
    for i, cell in enumerate(index.rep_cells):
        doc = {
            "elements": [list(table.word_of(w)) for w in cell],
            "a": index.a_values[i],
            "special": index.specials[i],
            "family": list(families[i]),
        }
        name = f"cell_{i:04d}.json"
        text = json.dumps(doc, separators=(",", ":"), sort_keys=True)
        (directory / name).write_text(text)
        files.append({"name": name, "sha256": hashlib.sha256(text.encode()).hexdigest()})
    manifest = {
        "format": LIBRARY_FORMAT,
        "group": group_spec,
        "count": len(files),
        "files": files,
    }
    (directory / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True))


def load_cell_library(table: ElementTable, group_spec: str, directory):
    """Re-create a lookup index from a saved library, verifying content hashes."""
    import hashlib
    import json
    from pathlib import Path

    directory = Path(directory)
    manifest = json.loads((directory / "manifest.json").read_text())
    if manifest.get("format") != LIBRARY_FORMAT or manifest.get("group") != group_spec:
        raise VerificationMismatch("cell library manifest does not match the group")
    cells = []
    a_vals = []
    specials = []
    families = []
    for entry in manifest["files"]:
        text = (directory / entry["name"]).read_text()
        if hashlib.sha256(text.encode()).hexdigest() != entry["sha256"]:
            raise VerificationMismatch(f"content hash mismatch for {entry['name']}")
        doc = json.loads(text)
        cells.append(tuple(sorted(table.id_from_word(w) for w in doc["elements"])))
        a_vals.append(doc["a"])
        specials.append(doc["special"])
        families.append(tuple(doc["family"]))
    return build_lookup_index(cells, a_vals, specials), families


def left_cell_of_element(table: ElementTable, index: CellLookupIndex, w: int):
    """(cell, a-value, special name) for w, via its right star orbit.

    BFS the right star orbit of w until it meets a representative cell, then
    walk the recorded star path backwards from that cell.
    """
    pairs = _star_pairs(table)
    prev = {w: None}
    queue = [w]
    hit = None
    while queue and hit is None:
        nxt = []
        for x in queue:
            if x in index.member_of:
                hit = x
                break
            for s, t in pairs:
                if in_star_domain(table, x, s, t):
                    y = star(table, x, s, t)
                    if y not in prev:
                        prev[y] = (x, s, t)
                        nxt.append(y)
        else:
            queue = nxt
            continue
    if hit is None:
        raise IndexMiss("right star orbit does not meet any representative cell")

    ri = index.member_of[hit]
    path = []
    x = hit
    while prev[x] is not None:
        px, s, t = prev[x]
        path.append((s, t))
        x = px
    cell = index.rep_cells[ri]
    for s, t in path:
        cell = cell_star_image(table, cell, s, t)
    if w not in cell:
        raise IndexMiss("star-path reversal did not recover the query's cell (bug)")
    return tuple(sorted(cell)), index.a_values[ri], index.specials[ri]
