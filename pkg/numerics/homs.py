"""Hom-space dimensions in the Auslander category of kQ.

``hom_dim`` evaluates the closed formula in Coxeter powers.
``mesh_quotient_hom_dim`` is an independent oracle: it counts paths in the
window and quotients by the span of the mesh relations over the rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import sympy

from dynkin.diagram import mu
from dynkin.quiver import Quiver
from errors import CaseMismatch, InternalInconsistency
from numerics.dimensions import coxeter_orbit, inverse_coxeter_orbit
from numerics.euler import euler_form, injective_dimvec
from translation.window import AusWindow, auslander_window
from translation.zq import ZQVertex, tau


@dataclass(frozen=True)
class MeshRelation:
    """Signed sum of the length-two paths from ``start = tau(end)`` to ``end``."""

    start: ZQVertex
    end: ZQVertex
    terms: Tuple[Tuple[ZQVertex, int], ...]


@dataclass(frozen=True)
class TrickResult:
    holds: bool
    failure: Optional[Tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def hom_dim(quiver: Quiver, x: ZQVertex, y: ZQVertex) -> int:
    """``dim Gamma(x, y)`` for window objects ``x`` and ``y``.

    With ``y = (i, p)`` and ``x = (i_x, p_x)`` put ``j = N(p_x) - i_x`` and
    ``q = mu(p_x)``. The value is ``(Phi^{i+j} i_p)(q)`` when ``i + j <= N(p)``,
    ``(Phi^{-i-j} p_q)(p)`` when ``i + j <= N(p_x)``, and zero otherwise.
    """

    window = auslander_window(quiver)
    x = window.require(x)
    y = window.require(y)
    exponents = window.exponents
    i, p = y
    step = i + exponents[x.vertex - 1] - x.column
    q = mu(quiver.dynkin, x.vertex)

    values = []
    if step <= exponents[p - 1]:
        values.append(coxeter_orbit(quiver, p, exponents[p - 1])[step][q - 1])
    if step <= exponents[x.vertex - 1]:
        values.append(inverse_coxeter_orbit(quiver, q, exponents[x.vertex - 1])[step][p - 1])

    if not values:
        return 0
    if len(set(values)) > 1:
        raise CaseMismatch(
            "overlapping cases of the Hom formula agree",
            {"quiver": quiver.label, "source": str(x), "target": str(y), "values": values},
        )
    return values[0]


@lru_cache(maxsize=None)
def hom_matrix(quiver: Quiver) -> np.ndarray:
    """``H[a, b] = hom_dim(objects[a], objects[b])`` in window order."""

    window = auslander_window(quiver)
    size = window.size
    matrix = np.zeros((size, size), dtype=np.int64)
    for a, x in enumerate(window.objects):
        for b, y in enumerate(window.objects):
            matrix[a, b] = hom_dim(quiver, x, y)
    matrix.setflags(write=False)
    return matrix


def trick_check(quiver: Quiver) -> TrickResult:
    """``<Phi^j i_p, i_q> = 0`` whenever ``N(p) - N(q) > j >= 0``."""

    window = auslander_window(quiver)
    exponents = window.exponents
    for p in quiver.vertices:
        orbit = coxeter_orbit(quiver, p, exponents[p - 1])
        for q in quiver.vertices:
            gap = exponents[p - 1] - exponents[q - 1]
            for j in range(max(gap, 0)):
                if euler_form(quiver, orbit[j], injective_dimvec(quiver, q)) != 0:
                    return TrickResult(False, (p, q, j))
    return TrickResult(True)


@lru_cache(maxsize=None)
def mesh_relations(quiver: Quiver) -> Tuple[MeshRelation, ...]:
    """One relation for each non-projective window object ``z``, from ``tau(z)`` to ``z``."""

    window = auslander_window(quiver)
    relations = []
    for z in window.objects:
        if window.is_projective(z):
            continue
        i, q = z
        terms = []
        for tail, head in quiver.arrows:
            if tail == q:
                terms.append((ZQVertex(i, head), 1))
            if head == q:
                terms.append((ZQVertex(i + 1, tail), -1))
        for middle, _ in terms:
            if middle not in window:
                raise InternalInconsistency(
                    "the window is convex",
                    {"quiver": quiver.label, "mesh": str(z), "middle": str(middle)},
                )
        relations.append(MeshRelation(start=tau(z), end=z, terms=tuple(sorted(terms))))
    return tuple(relations)


def _paths(window: AusWindow, source: ZQVertex, target: ZQVertex) -> List[Tuple[ZQVertex, ...]]:
    if source == target:
        return [(source,)]
    return [tuple(path) for path in nx.all_simple_paths(window.graph, source, target)]


def mesh_quotient_hom_dim(quiver: Quiver, x: ZQVertex, y: ZQVertex) -> int:
    """Dimension of the paths ``x -> y`` modulo the mesh ideal."""

    window = auslander_window(quiver)
    x = window.require(x)
    y = window.require(y)
    paths = _paths(window, x, y)
    if not paths:
        return 0
    column_of = {path: index for index, path in enumerate(paths)}

    rows: List[List[int]] = []
    for relation in mesh_relations(quiver):
        if not nx.has_path(window.graph, x, relation.start) or not nx.has_path(window.graph, relation.end, y):
            continue
        for prefix in _paths(window, x, relation.start):
            for suffix in _paths(window, relation.end, y):
                row = [0] * len(paths)
                for middle, sign in relation.terms:
                    row[column_of[prefix + (middle,) + suffix]] += sign
                rows.append(row)

    if not rows:
        return len(paths)
    return len(paths) - sympy.Matrix(rows).rank()


def path_count_matrix(quiver: Quiver, objects: Sequence[ZQVertex]) -> np.ndarray:
    """Mesh-quotient Hom dimensions for every ordered pair of ``objects``."""

    size = len(objects)
    matrix = np.zeros((size, size), dtype=np.int64)
    for a, x in enumerate(objects):
        for b, y in enumerate(objects):
            matrix[a, b] = mesh_quotient_hom_dim(quiver, x, y)
    return matrix
