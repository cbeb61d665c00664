"""Dimension vectors of the indecomposable kQ-modules labelled by the window."""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Mapping, Tuple

import networkx as nx
import numpy as np
from loguru import logger

from dynkin.quiver import Quiver
from errors import InternalInconsistency, NegativeKnit
from numerics.euler import DimVector, euler_data, injective_dimvec, projective_dimvec
from translation.window import auslander_window
from translation.zq import ZQVertex


@lru_cache(maxsize=None)
def coxeter_orbit(quiver: Quiver, q: int, length: int) -> Tuple[DimVector, ...]:
    """``(i_q, Phi i_q, ..., Phi^length i_q)``."""

    coxeter = euler_data(quiver).coxeter
    vector = np.asarray(injective_dimvec(quiver, q), dtype=np.int64)
    orbit = [tuple(int(v) for v in vector)]
    for _ in range(length):
        vector = coxeter @ vector
        orbit.append(tuple(int(v) for v in vector))
    return tuple(orbit)


@lru_cache(maxsize=None)
def inverse_coxeter_orbit(quiver: Quiver, q: int, length: int) -> Tuple[DimVector, ...]:
    """``(p_q, Phi^{-1} p_q, ..., Phi^{-length} p_q)``."""

    inverse = euler_data(quiver).coxeter_inverse
    vector = np.asarray(projective_dimvec(quiver, q), dtype=np.int64)
    orbit = [tuple(int(v) for v in vector)]
    for _ in range(length):
        vector = inverse @ vector
        orbit.append(tuple(int(v) for v in vector))
    return tuple(orbit)


def object_dimvec(quiver: Quiver, x: ZQVertex) -> DimVector:
    """``Phi^i i_q`` for the window object ``(i, q)``."""

    window = auslander_window(quiver)
    x = window.require(x)
    vector = coxeter_orbit(quiver, x.vertex, window.exponents[x.vertex - 1])[x.column]
    if min(vector) < 0:
        raise InternalInconsistency(
            "Phi^i i_q is non-negative inside the window",
            {"quiver": quiver.label, "object": str(x), "dim": list(vector)},
        )
    return vector


@lru_cache(maxsize=None)
def dimvec_table(quiver: Quiver) -> Dict[ZQVertex, DimVector]:
    window = auslander_window(quiver)
    return {x: object_dimvec(quiver, x) for x in window.objects}


@lru_cache(maxsize=None)
def knit_all(quiver: Quiver) -> Dict[ZQVertex, DimVector]:
    """Dimension vectors by mesh additivity, starting from the injectives.

    ``dim(tau x) = sum of dim(y) over arrows y -> x, minus dim(x)``. Columns are
    filled left to right; within a column, vertices follow a topological order
    of Q so that every predecessor is known before it is needed.
    """

    window = auslander_window(quiver)
    order = list(nx.lexicographical_topological_sort(quiver.graph))
    table: Dict[ZQVertex, DimVector] = {
        ZQVertex(0, q): injective_dimvec(quiver, q) for q in quiver.vertices
    }
    last_column = max(window.exponents)
    for column in range(last_column):
        for q in order:
            x = ZQVertex(column, q)
            shifted = ZQVertex(column + 1, q)
            if shifted not in window:
                continue
            total = np.zeros(quiver.rank, dtype=np.int64)
            for y in window.predecessors(x):
                total += np.asarray(table[y], dtype=np.int64)
            vector = tuple(int(v) for v in total - np.asarray(table[x], dtype=np.int64))
            if min(vector) < 0:
                raise NegativeKnit(
                    "knitted dimension vectors are non-negative",
                    {"quiver": quiver.label, "object": str(shifted), "dim": list(vector)},
                )
            table[shifted] = vector
    logger.bind(COMPONENT_TYPE="numerics", ENTITY_NAME=quiver.label).debug(
        f"Knitted {len(table)} dimension vectors"
    )
    return table


def dimvec_rows(table: Mapping[ZQVertex, DimVector]) -> Tuple[Tuple[int, ...], ...]:
    """Rows ``(i, q, d_1, ..., d_n)`` sorted by ``(q, i)``."""

    return tuple(
        (x.column, x.vertex, *vector)
        for x, vector in sorted(table.items(), key=lambda item: (item[0].vertex, item[0].column))
    )
