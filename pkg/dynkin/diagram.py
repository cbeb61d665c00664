"""Simply-laced Dynkin diagrams with a fixed vertex labelling.

Labelling (vertices are 1-based):

* ``A_n``: the path 1 - 2 - ... - n
* ``D_n``: the path 1 - ... - (n-2), with n-1 and n both attached to n-2
* ``E_n``: the path 1 - ... - (n-1), with n attached to 3
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import networkx as nx
import numpy as np

from errors import InvalidDynkinType

FAMILIES = ("A", "D", "E")

_MIN_RANK = {"A": 1, "D": 4, "E": 6}
_EXCEPTIONAL_RANKS = (6, 7, 8)

_EXCEPTIONAL_COXETER = {6: 12, 7: 18, 8: 30}
_EXCEPTIONAL_ROOTS = {6: 36, 7: 63, 8: 120}

Edge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class DynkinType:
    """A simply-laced Dynkin type such as ``D5``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidDynkinType(f"Unknown Dynkin family {self.family!r}; expected one of {FAMILIES}")
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise InvalidDynkinType(f"Rank must be an integer, got {self.rank!r}")
        if self.rank < _MIN_RANK[self.family]:
            raise InvalidDynkinType(
                f"Rank {self.rank} is too small for family {self.family} (minimum {_MIN_RANK[self.family]})"
            )
        if self.family == "E" and self.rank not in _EXCEPTIONAL_RANKS:
            raise InvalidDynkinType(f"Family E only exists in ranks {_EXCEPTIONAL_RANKS}, got {self.rank}")

    @classmethod
    def parse(cls, label: str) -> "DynkinType":
        """Parse labels such as ``"A3"`` or ``"e8"``."""

        text = label.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidDynkinType(f"Cannot parse Dynkin type {label!r}")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def __str__(self) -> str:
        return self.label


def diagram_edges(dynkin: DynkinType) -> Tuple[Edge, ...]:
    """Undirected edges as sorted pairs ``(smaller, larger)``."""

    n = dynkin.rank
    if dynkin.family == "A":
        edges = [(i, i + 1) for i in range(1, n)]
    elif dynkin.family == "D":
        edges = [(i, i + 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
    else:
        edges = [(i, i + 1) for i in range(1, n - 1)]
        edges.append((3, n))
    return tuple(sorted(edges))


@lru_cache(maxsize=None)
def diagram_graph(dynkin: DynkinType) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(dynkin.vertices)
    graph.add_edges_from(diagram_edges(dynkin))
    return nx.freeze(graph)


def mu(dynkin: DynkinType, q: int) -> int:
    """The diagram involution used by the Nakayama permutation."""

    n = dynkin.rank
    if not 1 <= q <= n:
        raise InvalidDynkinType(f"Vertex {q} is not a vertex of {dynkin.label}")
    if dynkin.family == "A":
        return n + 1 - q
    if dynkin.family == "D" and n % 2 == 1 and q >= n - 1:
        return 2 * n - 1 - q
    if dynkin.family == "E" and n == 6 and q <= 5:
        return 6 - q
    return q


@lru_cache(maxsize=None)
def cartan_matrix(dynkin: DynkinType) -> np.ndarray:
    n = dynkin.rank
    cartan = 2 * np.eye(n, dtype=np.int64)
    for a, b in diagram_edges(dynkin):
        cartan[a - 1, b - 1] = -1
        cartan[b - 1, a - 1] = -1
    cartan.setflags(write=False)
    return cartan


def coxeter_number(dynkin: DynkinType) -> int:
    n = dynkin.rank
    if dynkin.family == "A":
        return n + 1
    if dynkin.family == "D":
        return 2 * n - 2
    return _EXCEPTIONAL_COXETER[n]


def positive_root_count(dynkin: DynkinType) -> int:
    n = dynkin.rank
    if dynkin.family == "A":
        return n * (n + 1) // 2
    if dynkin.family == "D":
        return n * (n - 1)
    return _EXCEPTIONAL_ROOTS[n]


def all_types(max_rank: int) -> Tuple[DynkinType, ...]:
    """Every Dynkin type of rank at most ``max_rank`` in (family, rank) order."""

    types = []
    for family in FAMILIES:
        for rank in range(_MIN_RANK[family], max_rank + 1):
            if family == "E" and rank not in _EXCEPTIONAL_RANKS:
                continue
            types.append(DynkinType(family, rank))
    return tuple(types)
