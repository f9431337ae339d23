"""Computing with free homotopy classes of curves on surfaces whose
fundamental group is free: canonical cyclic words, fat-graph surfaces,
intersection numbers, the Goldman bracket, amalgamated-free-product
conjugacy, and audits of maps between surfaces."""

from .words import CyclicClass, canonical_cyclic, inverse, parse_word, primitive_root
from .surface import SurfaceSymbol, boundary_cycles, classify, is_excluded_surface, is_peripheral
from .linking import intersection_number, linked_pairs, self_intersection, turn_sign
from .goldman import BracketElement, bracket, bracket_classes, is_simple, scc_criterion_audit
from .auditor import SurfaceMap, apply_map, audit_bracket, audit_intersection, enumerate_classes, fill_check

__version__ = "0.1.0"
