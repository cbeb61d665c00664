"""Dynkin diagrams, quivers and Weyl group words."""

from dynkin.diagram import (
    DynkinType,
    all_types,
    cartan_matrix,
    coxeter_number,
    diagram_edges,
    mu,
    positive_root_count,
)
from dynkin.quiver import (
    Quiver,
    build_quiver,
    opposite,
    orientations,
    parse_arrows,
    pictured_orientation,
    reflect_quiver,
    running_example,
)
from dynkin.weyl import ReducedWord, verify_longest_adapted, weyl_apply

__all__ = [
    "DynkinType",
    "Quiver",
    "ReducedWord",
    "all_types",
    "build_quiver",
    "cartan_matrix",
    "coxeter_number",
    "diagram_edges",
    "mu",
    "opposite",
    "orientations",
    "parse_arrows",
    "pictured_orientation",
    "positive_root_count",
    "reflect_quiver",
    "running_example",
    "verify_longest_adapted",
    "weyl_apply",
]
