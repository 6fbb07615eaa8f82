"""Exact computation with Kazhdan-Lusztig cells in finite Coxeter groups.

Core layers:

* ``coxgraph`` / ``rootdata`` -- Coxeter graphs, classification, exact
  signed-root permutation realization, element arithmetic;
* ``grouptable`` -- enumeration with tabulated operations, cosets,
  conjugacy classes;
* ``laurent`` / ``kl`` / ``cprime`` -- Laurent polynomials, the
  Kazhdan-Lusztig polynomial and mu engine, canonical-basis products and
  the brute-force a-value oracle;
* ``cells`` / ``chartable`` -- cell partitions, W-graph cell modules,
  characters, a-values, b-invariants, families and specials,
  distinguished involutions;
* ``startau`` / ``induction`` -- star and string operations, generalized
  tau-invariants, parabolic induction, star-closure reconstruction and
  element-to-cell lookup;
* ``harness`` / ``cli`` -- conjecture checkers (Kottwitz,
  left-connectedness, the tau~/a characterization, RSK), intersection
  tables, and the command line front end.
"""

from .coxgraph import CoxeterGraph, parse_group_spec
from .grouptable import (
    ConjClass,
    ConjugacyData,
    ElementTable,
    conjugacy_analysis,
    enumerate_elements,
    min_coset_reps,
    project_parabolic,
)
from .kl import KLTable, load_mu_cache, save_mu_cache
from .laurent import LaurentPoly
from .rootdata import (
    GroupElement,
    RootDatum,
    bruhat_leq,
    build_group,
    build_group_from_spec,
    canonical_word,
    inverse,
    length_and_descents,
    length_of,
    multiply,
    word_to_element,
)
from .session import CoxeterGroup

__all__ = [
    "CoxeterGraph",
    "CoxeterGroup",
    "ConjClass",
    "ConjugacyData",
    "ElementTable",
    "GroupElement",
    "KLTable",
    "LaurentPoly",
    "RootDatum",
    "bruhat_leq",
    "build_group",
    "build_group_from_spec",
    "canonical_word",
    "conjugacy_analysis",
    "enumerate_elements",
    "inverse",
    "length_and_descents",
    "length_of",
    "load_mu_cache",
    "min_coset_reps",
    "multiply",
    "parse_group_spec",
    "project_parabolic",
    "save_mu_cache",
    "word_to_element",
]
