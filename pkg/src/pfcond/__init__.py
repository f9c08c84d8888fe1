"""Exact Pfaffians, perfect matchings and graphical condensation identities."""

from .embedding import Embedding, PlaneGraph, blocks
from .graph import Edge, OrderedGraph, OrderedVertexSet, induced_delete, setsum
from .kasteleyn import Orientation, count_via_pfaffian, kasteleyn_orient, verify_admissible
from .matchings import count_matchings, enumerate_matchings, matching_gf
from .pfaffian import SkewArray, crossing_sign, det_skew, pf_definition, pf_eliminate

__all__ = [
    "Edge", "Embedding", "OrderedGraph", "OrderedVertexSet", "Orientation", "PlaneGraph", "SkewArray",
    "blocks", "count_matchings", "count_via_pfaffian", "crossing_sign", "det_skew", "enumerate_matchings",
    "induced_delete", "kasteleyn_orient", "matching_gf", "pf_definition", "pf_eliminate", "setsum",
    "verify_admissible",
]
