"""One-stop computation context for a single finite Coxeter group.

Wires the modules together and caches every derived artifact (enumeration
tables, mu-data, cell partitions, characters, a-values, specials, ...) so
the expensive steps run once per session.  All cached objects are
immutable; recomputation is deterministic.
"""

from __future__ import annotations

import os
from functools import cached_property

from . import cells as cells_mod
from . import chartable as ct_mod
from .coxgraph import CoxeterGraph
from .grouptable import ElementTable, conjugacy_analysis
from .induction import build_lookup_index
from .kl import KLTable
from .rootdata import build_group
from .startau import star_class_representatives, tau_partition

ENUM_BOUND_ENV = "COXCELLS_ENUM_BOUND"


def enumeration_bound(default: int = 1_000_000) -> int:
    override = os.environ.get(ENUM_BOUND_ENV)
    return int(override) if override else default


class CoxeterGroup:
    """A group spec plus lazily computed cell data."""

    def __init__(self, graph: CoxeterGraph, bound: int | None = None):
        self.graph = graph
        self.spec = graph.type_name
        self.datum = build_group(graph, bound if bound is not None else enumeration_bound())

    @staticmethod
    def from_spec(spec: str, bound: int | None = None) -> "CoxeterGroup":
        return CoxeterGroup(CoxeterGraph.from_spec(spec), bound)

    # -- structural layers -------------------------------------------------------

    @cached_property
    def table(self) -> ElementTable:
        return ElementTable(self.datum)

    @cached_property
    def conjugacy(self):
        return conjugacy_analysis(self.table)

    @cached_property
    def kl(self) -> KLTable:
        return KLTable(self.table)

    @cached_property
    def left_cells(self):
        return cells_mod.left_cells(self.table, self.kl)

    @cached_property
    def _right_two(self):
        return cells_mod.right_and_two_sided_cells(self.table, self.kl, self.left_cells)

    @property
    def right_cells(self):
        return self._right_two[0]

    @property
    def two_sided_cells(self):
        return self._right_two[1]

    # -- numerical invariants ------------------------------------------------------

    @cached_property
    def a_values(self) -> tuple[int, ...]:
        return cells_mod.a_values_for_partition(
            self.table, self.kl, self.left_cells, self.two_sided_cells
        )

    def a_of_element(self, w: int) -> int:
        return self.a_values[self.two_sided_cells.block_of[w]]

    @cached_property
    def character_table(self):
        return ct_mod.character_table(self.table, self.conjugacy)

    @cached_property
    def cell_modules(self):
        return [
            cells_mod.cell_module(self.table, self.kl, b) for b in self.left_cells.blocks
        ]

    @cached_property
    def cell_characters(self):
        return [
            cells_mod.cell_character(self.table, m, self.conjugacy)
            for m in self.cell_modules
        ]

    @cached_property
    def two_sided_info(self):
        return ct_mod.family_and_special(
            self.conjugacy,
            self.character_table,
            self.left_cells,
            self.two_sided_cells,
            self.a_values,
            self.cell_characters,
        )

    @cached_property
    def distinguished_involutions(self) -> tuple[int, ...]:
        return cells_mod.distinguished_involutions(
            self.table, self.kl, self.left_cells, self.a_of_element
        )

    # -- star structure ------------------------------------------------------------

    def tau_cells(self, mode: str = "simply_laced"):
        return tau_partition(self.table, mode=mode)

    @cached_property
    def star_orbit_data(self):
        return star_class_representatives(self.table, self.left_cells)

    @cached_property
    def lookup_index(self):
        reps = self.star_orbit_data.representatives
        two = self.two_sided_cells
        infos = {i.block: i for i in self.two_sided_info}
        rep_cells = [self.left_cells.blocks[b] for b in reps]
        a_vals = [self.a_values[two.block_of[c[0]]] for c in rep_cells]
        specials = [infos[two.block_of[c[0]]].special for c in rep_cells]
        return build_lookup_index(rep_cells, a_vals, specials)
