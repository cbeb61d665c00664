"""Dimension-level shadow of the duality between Q and its opposite."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping

import networkx as nx
from networkx.algorithms import isomorphism

from dynkin.diagram import mu
from dynkin.quiver import Quiver, opposite
from numerics.euler import DimVector
from numerics.homs import hom_matrix
from start.graded import graded_quiver
from start.module import summands
from translation.window import auslander_window
from translation.zq import ZQVertex


@dataclass(frozen=True)
class DualData:
    dual_summands: Mapping[ZQVertex, DimVector]


@dataclass(frozen=True)
class DualityReport:
    multiset_match: bool
    pairing_match: bool
    graded_opposite: bool

    @property
    def passed(self) -> bool:
        return self.multiset_match and self.pairing_match and self.graded_opposite


def dual_summand_dimvec(quiver: Quiver, x: ZQVertex) -> DimVector:
    """``dim P(x)``: fibre sums of ``dim Gamma(x, y)`` over the projection."""

    window = auslander_window(quiver)
    row = hom_matrix(quiver)[window.index(x)]
    vector = [0] * quiver.rank
    for y, value in zip(window.objects, row):
        vector[y.vertex - 1] += int(value)
    return tuple(vector)


@lru_cache(maxsize=None)
def dual_summands(quiver: Quiver) -> DualData:
    window = auslander_window(quiver)
    return DualData({x: dual_summand_dimvec(quiver, x) for x in window.objects})


def relabel_by_mu(quiver: Quiver, vector: DimVector) -> DimVector:
    return tuple(vector[mu(quiver.dynkin, p) - 1] for p in quiver.vertices)


def opposite_object(quiver: Quiver, x: ZQVertex) -> ZQVertex:
    """The object of the window of Q^op carrying the dual module of ``x``."""

    window = auslander_window(quiver)
    i, q = window.require(x)
    return ZQVertex(window.exponents[q - 1] - i, mu(quiver.dynkin, q))


def multiset_matches(quiver: Quiver) -> bool:
    """Dual summands of Q against the mu-relabelled summands of Q^op."""

    dual = Counter(dual_summands(quiver).dual_summands.values())
    other = opposite(quiver)
    relabelled = Counter(relabel_by_mu(other, vector) for vector in summands(other).values())
    return dual == relabelled


def pairing_matches(quiver: Quiver) -> bool:
    other = opposite(quiver)
    dual = dual_summands(quiver).dual_summands
    other_summands = summands(other)
    for x, vector in dual.items():
        partner = opposite_object(quiver, x)
        if partner not in other_summands:
            return False
        if relabel_by_mu(other, other_summands[partner]) != vector:
            return False
    return True


def _degree_edges(graph: nx.DiGraph) -> Dict[tuple, int]:
    return {(s, t): data["degree"] for s, t, data in graph.edges(data=True)}


def graded_opposite_matches(quiver: Quiver) -> bool:
    """The graded quiver of Q^op is the opposite of that of Q under ``opposite_object``."""

    ours = graded_quiver(quiver).graph()
    theirs = graded_quiver(opposite(quiver)).graph()
    mapped = {
        (opposite_object(quiver, t), opposite_object(quiver, s)): degree
        for (s, t), degree in _degree_edges(ours).items()
    }
    return mapped == _degree_edges(theirs)


def graded_opposite_isomorphic(quiver: Quiver) -> bool:
    """Same statement found by graph-isomorphism search, without the explicit map."""

    ours = graded_quiver(quiver).graph().reverse(copy=True)
    theirs = graded_quiver(opposite(quiver)).graph()
    matcher = isomorphism.DiGraphMatcher(
        ours, theirs, edge_match=isomorphism.numerical_edge_match("degree", 0)
    )
    return matcher.is_isomorphic()


def duality_report(quiver: Quiver) -> DualityReport:
    return DualityReport(
        multiset_match=multiset_matches(quiver),
        pairing_match=pairing_matches(quiver),
        graded_opposite=graded_opposite_matches(quiver),
    )
