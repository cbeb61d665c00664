"""Dynkin quivers: orientations of a diagram, reflections and serialisation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

import networkx as nx
from loguru import logger

from dynkin.diagram import DynkinType, diagram_edges
from errors import EdgeMismatch, NotASource

Arrow = Tuple[int, int]


@dataclass(frozen=True)
class Quiver:
    """An orientation of a Dynkin diagram.

    ``arrows`` holds ``(tail, head)`` pairs sorted lexicographically, which
    makes equal quivers compare and hash equal.
    """

    dynkin: DynkinType
    arrows: Tuple[Arrow, ...]

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @property
    def vertices(self) -> range:
        return self.dynkin.vertices

    @property
    def arrow_spec(self) -> str:
        return ",".join(f"{tail}>{head}" for tail, head in self.arrows)

    @property
    def label(self) -> str:
        return f"{self.dynkin.label}[{self.arrow_spec}]"

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows)
        return nx.freeze(graph)

    def incoming(self, q: int) -> Tuple[Arrow, ...]:
        return tuple(arrow for arrow in self.arrows if arrow[1] == q)

    def outgoing(self, q: int) -> Tuple[Arrow, ...]:
        return tuple(arrow for arrow in self.arrows if arrow[0] == q)

    def is_source(self, q: int) -> bool:
        """A source has no incoming arrows."""

        return not self.incoming(q)

    def sources(self) -> Tuple[int, ...]:
        return tuple(q for q in self.vertices if self.is_source(q))

    def to_dict(self) -> Dict[str, object]:
        return {
            "type": self.dynkin.family,
            "rank": self.rank,
            "arrows": [list(arrow) for arrow in self.arrows],
        }

    def __str__(self) -> str:
        return self.label


def build_quiver(dynkin: DynkinType, arrows: Iterable[Sequence[int]]) -> Quiver:
    """Validate ``arrows`` as an orientation of ``dynkin`` and build the quiver."""

    arrow_list: List[Arrow] = []
    for arrow in arrows:
        if len(arrow) != 2:
            raise EdgeMismatch(f"Arrow {arrow!r} must have exactly a tail and a head")
        tail, head = int(arrow[0]), int(arrow[1])
        for vertex in (tail, head):
            if vertex not in dynkin.vertices:
                raise EdgeMismatch(f"Vertex {vertex} in arrow {tail}>{head} is not a vertex of {dynkin.label}")
        if tail == head:
            raise EdgeMismatch(f"Loop {tail}>{head} is not allowed")
        arrow_list.append((tail, head))

    expected = set(diagram_edges(dynkin))
    seen = set()
    for tail, head in arrow_list:
        edge = (min(tail, head), max(tail, head))
        if edge not in expected:
            raise EdgeMismatch(f"Arrow {tail}>{head} does not lie on an edge of {dynkin.label}")
        if edge in seen:
            raise EdgeMismatch(f"Edge {edge[0]}-{edge[1]} of {dynkin.label} is oriented more than once")
        seen.add(edge)

    missing = sorted(expected - seen)
    if missing:
        readable = ", ".join(f"{a}-{b}" for a, b in missing)
        raise EdgeMismatch(f"Edges without orientation in {dynkin.label}: {readable}")

    return Quiver(dynkin, tuple(sorted(arrow_list)))


def parse_arrows(text: str) -> List[Arrow]:
    """Parse the ``"t>h,t>h"`` orientation syntax."""

    arrows: List[Arrow] = []
    if not text or not text.strip():
        return arrows
    for chunk in text.split(","):
        parts = chunk.strip().split(">")
        if len(parts) != 2 or not all(part.strip().lstrip("-").isdigit() for part in parts):
            raise EdgeMismatch(f"Cannot parse arrow {chunk.strip()!r}; expected the form t>h")
        arrows.append((int(parts[0]), int(parts[1])))
    return arrows


def quiver_from_dict(payload: Mapping[str, object]) -> Quiver:
    dynkin = DynkinType(str(payload["type"]), int(payload["rank"]))
    return build_quiver(dynkin, payload.get("arrows", []))


def reflect_quiver(quiver: Quiver, q: int) -> Quiver:
    """Reverse every arrow at the source ``q``."""

    if not quiver.is_source(q):
        raise NotASource(f"Vertex {q} is not a source of {quiver.label}")
    arrows = [(head, tail) if tail == q else (tail, head) for tail, head in quiver.arrows]
    return Quiver(quiver.dynkin, tuple(sorted(arrows)))


def opposite(quiver: Quiver) -> Quiver:
    return Quiver(quiver.dynkin, tuple(sorted((head, tail) for tail, head in quiver.arrows)))


def orientations(dynkin: DynkinType) -> Iterator[Quiver]:
    """All 2^(n-1) orientations of ``dynkin`` in a fixed order."""

    edges = diagram_edges(dynkin)
    for flips in itertools.product((False, True), repeat=len(edges)):
        arrows = [(b, a) if flip else (a, b) for (a, b), flip in zip(edges, flips)]
        yield Quiver(dynkin, tuple(sorted(arrows)))


@lru_cache(maxsize=None)
def pictured_orientation(dynkin: DynkinType) -> Quiver:
    """The orientation the closed forms for dim End are stated for.

    ``A_n`` and ``D_n`` point away from vertex 1; ``E_n`` points towards the
    branch vertex 3.
    """

    if dynkin.family in ("A", "D"):
        arrows = list(diagram_edges(dynkin))
    else:
        arrows = []
        for a, b in diagram_edges(dynkin):
            if b == dynkin.rank and a == 3:
                arrows.append((b, a))
            elif b <= 3:
                arrows.append((a, b))
            else:
                arrows.append((b, a))
    quiver = build_quiver(dynkin, arrows)
    logger.bind(COMPONENT_TYPE="system", ENTITY_NAME=quiver.label).debug("Built pictured orientation")
    return quiver


def running_example() -> Quiver:
    """The D5 quiver 4>3, 3>5, 2>3, 2>1 used in the golden fixtures."""

    return build_quiver(DynkinType("D", 5), [(4, 3), (3, 5), (2, 3), (2, 1)])
