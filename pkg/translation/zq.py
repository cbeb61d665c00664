"""The translation quiver ZQ and its Nakayama permutation."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Tuple

import networkx as nx

from dynkin.diagram import coxeter_number, diagram_graph, mu
from dynkin.quiver import Quiver
from errors import InternalInconsistency


class ZQVertex(NamedTuple):
    """Vertex ``(i, q)`` of ZQ; ``tau`` raises the column by one."""

    column: int
    vertex: int

    def __str__(self) -> str:
        return f"({self.column},{self.vertex})"


@dataclass(frozen=True)
class ZQArrow:
    """Arrow ``(i, a)`` or ``(i, a*)`` of ZQ for an arrow ``a`` of Q."""

    source: ZQVertex
    target: ZQVertex
    arrow: Tuple[int, int]
    starred: bool
    column: int


def tau(v: ZQVertex, steps: int = 1) -> ZQVertex:
    return ZQVertex(v.column + steps, v.vertex)


def zq_arrows_at(quiver: Quiver, v: ZQVertex) -> Tuple[List[ZQArrow], List[ZQArrow]]:
    """Incoming and outgoing arrows of ZQ at ``v``.

    For ``a: t -> h`` in Q: ``(i, a): (i+1, t) -> (i, h)`` and
    ``(i, a*): (i, h) -> (i, t)``.
    """

    i, q = v
    incoming: List[ZQArrow] = []
    outgoing: List[ZQArrow] = []
    for arrow in quiver.arrows:
        t, h = arrow
        if h == q:
            incoming.append(ZQArrow(ZQVertex(i + 1, t), v, arrow, False, i))
            outgoing.append(ZQArrow(v, ZQVertex(i, t), arrow, True, i))
        if t == q:
            incoming.append(ZQArrow(ZQVertex(i, h), v, arrow, True, i))
            outgoing.append(ZQArrow(v, ZQVertex(i - 1, h), arrow, False, i - 1))
    return incoming, outgoing


@lru_cache(maxsize=None)
def walk_defect(quiver: Quiver, q: int) -> int:
    """Number of arrows pointing towards 1 on the walk from 1 to ``q``."""

    walk = nx.shortest_path(diagram_graph(quiver.dynkin), 1, q)
    arrows = set(quiver.arrows)
    return sum(1 for near, far in zip(walk, walk[1:]) if (far, near) in arrows)


def nakayama_shift(quiver: Quiver, q: int) -> int:
    """Column offset of the Nakayama permutation on the row of ``q``."""

    dynkin = quiver.dynkin
    n = dynkin.rank
    image = mu(dynkin, q)
    defect = walk_defect(quiver, image) - walk_defect(quiver, q)
    if dynkin.family == "A":
        return q - 1 + defect
    if dynkin.family == "D":
        return n - 2 + defect
    if n == 6:
        return 5 if q == 6 else q + 2 + defect
    return 8 if n == 7 else 14


def nakayama(quiver: Quiver, v: ZQVertex) -> ZQVertex:
    return ZQVertex(v.column + nakayama_shift(quiver, v.vertex), mu(quiver.dynkin, v.vertex))


def nakayama_inverse(quiver: Quiver, v: ZQVertex) -> ZQVertex:
    preimage = mu(quiver.dynkin, v.vertex)
    return ZQVertex(v.column - nakayama_shift(quiver, preimage), preimage)


@lru_cache(maxsize=None)
def nu_exponents(quiver: Quiver) -> Dict[int, int]:
    """``N(q)``: the column of ``nakayama((0, mu(q)))``, for every vertex."""

    exponents = {}
    for q in quiver.vertices:
        target = nakayama(quiver, ZQVertex(0, mu(quiver.dynkin, q)))
        if target.vertex != q or target.column < 0:
            raise InternalInconsistency(
                "nakayama((0, mu(q))) lies on the tau-orbit of (0, q)",
                {"quiver": quiver.label, "q": q, "image": str(target)},
            )
        exponents[q] = target.column
    return exponents


def nu_exponent(quiver: Quiver, q: int) -> int:
    return nu_exponents(quiver)[q]


def sigma_object(quiver: Quiver, v: ZQVertex) -> ZQVertex:
    """Suspension on objects, ``nakayama`` after ``tau``."""

    return nakayama(quiver, tau(v))


def sigma_squared_shift(quiver: Quiver) -> int:
    """Column shift of the suspension applied twice.

    Objects of the stable category are twists of injectives by ZQ vertices.
    Its AR translate is the twist by ``tau`` inverse, so the functor
    ``tau^{-h}`` moves vertices by ``tau^{+h}``.
    """

    return coxeter_number(quiver.dynkin)

