"""The Auslander window of ZQ: the objects ``(i, q)`` with ``0 <= i <= N(q)``."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx
from loguru import logger

from dynkin.quiver import Quiver
from errors import OutOfWindow
from translation.zq import (
    ZQVertex,
    nakayama,
    nakayama_inverse,
    nu_exponents,
    tau,
    zq_arrows_at,
)

WindowArrow = Tuple[ZQVertex, ZQVertex]


@dataclass(frozen=True)
class AusWindow:
    quiver: Quiver
    exponents: Tuple[int, ...]
    objects: Tuple[ZQVertex, ...]
    arrows: Tuple[WindowArrow, ...]

    @property
    def N(self) -> Dict[int, int]:
        return {q: self.exponents[q - 1] for q in self.quiver.vertices}

    @property
    def size(self) -> int:
        return len(self.objects)

    @cached_property
    def _object_set(self) -> FrozenSet[ZQVertex]:
        return frozenset(self.objects)

    @cached_property
    def _positions(self) -> Dict[ZQVertex, int]:
        return {obj: index for index, obj in enumerate(self.objects)}

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.objects)
        graph.add_edges_from(self.arrows)
        return nx.freeze(graph)

    def __contains__(self, v: object) -> bool:
        return v in self._object_set

    def require(self, v: ZQVertex) -> ZQVertex:
        v = ZQVertex(*v)
        if v not in self:
            raise OutOfWindow(f"{v} is not an object of the window of {self.quiver.label}")
        return v

    def index(self, v: ZQVertex) -> int:
        return self._positions[self.require(v)]

    def is_projective(self, v: ZQVertex) -> bool:
        v = self.require(v)
        return v.column == self.exponents[v.vertex - 1]

    def is_injective(self, v: ZQVertex) -> bool:
        return self.require(v).column == 0

    def projectives(self) -> Tuple[ZQVertex, ...]:
        return tuple(v for v in self.objects if self.is_projective(v))

    def injectives(self) -> Tuple[ZQVertex, ...]:
        return tuple(v for v in self.objects if v.column == 0)

    def project(self, v: ZQVertex) -> int:
        """The projection to Q_0 forgetting the column."""

        return self.require(v).vertex

    def predecessors(self, v: ZQVertex) -> Tuple[ZQVertex, ...]:
        return tuple(sorted(self.graph.predecessors(self.require(v))))

    def successors(self, v: ZQVertex) -> Tuple[ZQVertex, ...]:
        return tuple(sorted(self.graph.successors(self.require(v))))

    def orbit(self, q: int) -> Tuple[ZQVertex, ...]:
        return tuple(ZQVertex(i, q) for i in range(self.exponents[q - 1] + 1))

    def to_dict(self) -> Dict[str, object]:
        return {
            "quiver": self.quiver.to_dict(),
            "N": {str(q): n for q, n in self.N.items()},
            "objects": [list(v) for v in self.objects],
            "arrows": [[list(src), list(dst)] for src, dst in self.arrows],
        }


def _window_arrows(quiver: Quiver, objects: Iterable[ZQVertex]) -> Tuple[WindowArrow, ...]:
    members = set(objects)
    arrows = set()
    for v in members:
        _, outgoing = zq_arrows_at(quiver, v)
        for arrow in outgoing:
            if arrow.target in members:
                arrows.add((arrow.source, arrow.target))
    return tuple(sorted(arrows))


@lru_cache(maxsize=None)
def auslander_window(quiver: Quiver) -> AusWindow:
    exponents = nu_exponents(quiver)
    objects = tuple(
        sorted(ZQVertex(i, q) for q in quiver.vertices for i in range(exponents[q] + 1))
    )
    window = AusWindow(
        quiver=quiver,
        exponents=tuple(exponents[q] for q in quiver.vertices),
        objects=objects,
        arrows=_window_arrows(quiver, objects),
    )
    logger.bind(COMPONENT_TYPE="window", ENTITY_NAME=quiver.label).debug(
        f"Window built: {window.size} objects, {len(window.arrows)} arrows"
    )
    return window


def repetitive_object(quiver: Quiver, z: int, x: ZQVertex) -> ZQVertex:
    """``tau^i nakayama^{-z}(0, q)`` for a non-projective window object ``(i, q)``."""

    window = auslander_window(quiver)
    x = window.require(x)
    if window.is_projective(x):
        raise OutOfWindow(f"{x} is projective and has no counterpart in the stable category")
    base = ZQVertex(0, x.vertex)
    step = nakayama_inverse if z > 0 else nakayama
    for _ in range(abs(z)):
        base = step(quiver, base)
    return tau(base, x.column)
