"""The graded quiver of End(M_Q)^op with its relations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import networkx as nx

from dynkin.quiver import Quiver
from numerics.homs import mesh_relations
from translation.window import WindowArrow, auslander_window
from translation.zq import ZQVertex, tau

MESH = "mesh"
COMMUTATIVITY = "commutativity"
ZERO = "zero"


@dataclass(frozen=True)
class Relation:
    """A relation ``sum coefficient * path`` between two vertices.

    A path is a tuple of arrow ids, composed left to right.
    """

    kind: str
    source: ZQVertex
    target: ZQVertex
    terms: Tuple[Tuple[int, Tuple[int, ...]], ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "source": list(self.source),
            "target": list(self.target),
            "terms": [{"coefficient": c, "path": list(path)} for c, path in self.terms],
        }


@dataclass(frozen=True)
class GradedQuiver:
    """Vertices are window objects; arrow ids number ``arrows0`` then ``arrows1``."""

    quiver: Quiver
    vertices: Tuple[ZQVertex, ...]
    arrows0: Tuple[WindowArrow, ...]
    arrows1: Tuple[WindowArrow, ...]
    relations: Tuple[Relation, ...]

    def arrow(self, arrow_id: int) -> Tuple[ZQVertex, ZQVertex, int]:
        if arrow_id < len(self.arrows0):
            source, target = self.arrows0[arrow_id]
            return source, target, 0
        source, target = self.arrows1[arrow_id - len(self.arrows0)]
        return source, target, 1

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows0, degree=0)
        graph.add_edges_from(self.arrows1, degree=1)
        return graph

    def relations_of(self, kind: str) -> Tuple[Relation, ...]:
        return tuple(relation for relation in self.relations if relation.kind == kind)

    def to_dict(self) -> Dict[str, object]:
        return {
            "vertices": [list(v) for v in self.vertices],
            "arrows0": [[list(s), list(t)] for s, t in self.arrows0],
            "arrows1": [[list(s), list(t)] for s, t in self.arrows1],
            "relations": [relation.to_dict() for relation in self.relations],
        }


@lru_cache(maxsize=None)
def graded_quiver(quiver: Quiver) -> GradedQuiver:
    window = auslander_window(quiver)
    arrows0 = window.arrows
    arrows1 = tuple((x, tau(x)) for x in window.objects if not window.is_projective(x))

    ids0 = {arrow: index for index, arrow in enumerate(arrows0)}
    ids1 = {arrow[0]: len(arrows0) + index for index, arrow in enumerate(arrows1)}

    relations: List[Relation] = []
    for mesh in mesh_relations(quiver):
        terms = tuple(
            (sign, (ids0[(mesh.start, middle)], ids0[(middle, mesh.end)]))
            for middle, sign in mesh.terms
        )
        relations.append(Relation(MESH, mesh.start, mesh.end, terms))

    # t_y a - (tau a) t_x for a: x -> y with y non-projective.
    for x, y in arrows0:
        if window.is_projective(y):
            continue
        first = (1, (ids0[(x, y)], ids1[y]))
        if window.is_projective(x):
            relations.append(Relation(ZERO, x, tau(y), (first,)))
            continue
        second = (-1, (ids1[x], ids0[(tau(x), tau(y))]))
        relations.append(Relation(COMMUTATIVITY, x, tau(y), (first, second)))

    return GradedQuiver(
        quiver=quiver,
        vertices=window.objects,
        arrows0=arrows0,
        arrows1=arrows1,
        relations=tuple(relations),
    )
