"""Dimension data of the start module M_Q and its rigidity certificate."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Mapping, Tuple

import numpy as np
from loguru import logger

from dynkin.diagram import DynkinType, mu
from dynkin.quiver import Quiver, pictured_orientation
from errors import InvalidDynkinType, WrongFamily
from numerics.dimensions import coxeter_orbit
from numerics.euler import DimVector, euler_form
from numerics.homs import hom_matrix
from translation.window import auslander_window
from translation.zq import ZQVertex

EXCEPTIONAL_DIM_END = {6: 2444, 7: 13130, 8: 107114}


@dataclass(frozen=True)
class StartModuleData:
    summands: Mapping[ZQVertex, DimVector]
    total: DimVector
    dim_end: int


@dataclass(frozen=True)
class RigidityCertificate:
    euler: int
    endim: int

    @property
    def rigid(self) -> bool:
        return self.euler == self.endim

    def to_dict(self) -> Dict[str, object]:
        return {"euler": self.euler, "endim": self.endim, "rigid": self.rigid}


def _add(left: DimVector, right: DimVector) -> DimVector:
    return tuple(a + b for a, b in zip(left, right))


def summand_dimvec(quiver: Quiver, x: ZQVertex) -> DimVector:
    """``dim M(x)`` for ``x = (j, q)``.

    The entry at ``mu(p)`` is ``sum_{i=j}^{N(q)} (Phi^i i_q)(p)``. This is the
    only place where the relabelling by ``mu`` happens.
    """

    window = auslander_window(quiver)
    j, q = window.require(x)
    last = window.exponents[q - 1]
    orbit = coxeter_orbit(quiver, q, last)
    vector = [0] * quiver.rank
    for i in range(j, last + 1):
        for p in quiver.vertices:
            vector[mu(quiver.dynkin, p) - 1] += orbit[i][p - 1]
    return tuple(vector)


def summand_from_homs(quiver: Quiver, x: ZQVertex) -> DimVector:
    """``dim M(x)`` as fibre sums of ``dim Gamma(y, x)`` over the projection."""

    window = auslander_window(quiver)
    column = hom_matrix(quiver)[:, window.index(x)]
    vector = [0] * quiver.rank
    for y, value in zip(window.objects, column):
        vector[y.vertex - 1] += int(value)
    return tuple(vector)


@lru_cache(maxsize=None)
def summands(quiver: Quiver) -> Dict[ZQVertex, DimVector]:
    window = auslander_window(quiver)
    return {x: summand_dimvec(quiver, x) for x in window.objects}


def total_dimvec(quiver: Quiver) -> DimVector:
    total: DimVector = (0,) * quiver.rank
    for vector in summands(quiver).values():
        total = _add(total, vector)
    return total


def total_dimvec_formula(quiver: Quiver) -> DimVector:
    """``(dim M_Q)(mu(p)) = sum_q sum_i (i+1) (Phi^i i_q)(p)``."""

    window = auslander_window(quiver)
    vector = [0] * quiver.rank
    for q in quiver.vertices:
        last = window.exponents[q - 1]
        for i, image in enumerate(coxeter_orbit(quiver, q, last)):
            for p in quiver.vertices:
                vector[mu(quiver.dynkin, p) - 1] += (i + 1) * image[p - 1]
    return tuple(vector)


def dim_end(quiver: Quiver) -> int:
    """Binomial form of ``dim End(M_Q)``."""

    window = auslander_window(quiver)
    total = 0
    for q in quiver.vertices:
        last = window.exponents[q - 1]
        for i, image in enumerate(coxeter_orbit(quiver, q, last)):
            total += (comb(last + 2, 2) - comb(i + 1, 2)) * sum(image)
    return total


def dim_end_staircase(quiver: Quiver) -> int:
    """``sum_q sum_i sum_{j=i}^{N(q)} (j+1) |Phi^i i_q|``."""

    window = auslander_window(quiver)
    total = 0
    for q in quiver.vertices:
        last = window.exponents[q - 1]
        for i, image in enumerate(coxeter_orbit(quiver, q, last)):
            size = sum(image)
            for j in range(i, last + 1):
                total += (j + 1) * size
    return total


def dim_end_graded(quiver: Quiver) -> int:
    """Sum of the homogeneous components ``Gamma(tau^i x, y)`` over ``x``, ``y`` and ``i >= 0``."""

    window = auslander_window(quiver)
    row_sums = hom_matrix(quiver).sum(axis=1)
    total = 0
    for x in window.objects:
        shifted = x
        while shifted in window:
            total += int(row_sums[window.index(shifted)])
            shifted = ZQVertex(shifted.column + 1, shifted.vertex)
    return total


@lru_cache(maxsize=None)
def start_module(quiver: Quiver) -> StartModuleData:
    data = StartModuleData(
        summands=summands(quiver),
        total=total_dimvec(quiver),
        dim_end=dim_end(quiver),
    )
    logger.bind(COMPONENT_TYPE="start", ENTITY_NAME=quiver.label).debug(
        f"Start module: total {list(data.total)}, dim End {data.dim_end}"
    )
    return data


def rigidity_certificate(quiver: Quiver) -> RigidityCertificate:
    data = start_module(quiver)
    return RigidityCertificate(euler=euler_form(quiver, data.total, data.total), endim=data.dim_end)


def dq_closed_form(family: str, rank: int) -> int:
    """Closed form of ``dim End(M_Q)`` for the pictured orientation."""

    n = rank
    if family == "A" and n >= 1:
        return 2 * comb(n, 5) + 7 * comb(n, 4) + 9 * comb(n, 3) + 5 * comb(n, 2) + n
    if family == "D" and n >= 4:
        return 27 * comb(n, 5) + 43 * comb(n, 4) + 19 * comb(n, 3) + 2 * comb(n, 2)
    if family == "E" and n in EXCEPTIONAL_DIM_END:
        return EXCEPTIONAL_DIM_END[n]
    raise WrongFamily(f"No closed form for dim End in type {family}{n}")


def dq_table(family: str, max_rank: int) -> Dict[int, Dict[str, int]]:
    """Closed form next to the computed value for every rank up to ``max_rank``."""

    table = {}
    for rank in range(1, max_rank + 1):
        try:
            dynkin = DynkinType(family, rank)
        except InvalidDynkinType:
            continue
        quiver = pictured_orientation(dynkin)
        table[rank] = {"closed_form": dq_closed_form(family, rank), "dim_end": dim_end(quiver)}
    if not table:
        raise WrongFamily(f"No rank up to {max_rank} exists in family {family}")
    return table


def injective_summand_roots(quiver: Quiver) -> Dict[int, Tuple[int, ...]]:
    """``dim M((0, q))`` for each ``q``; these are the injective Λ-modules."""

    return {q: summand_dimvec(quiver, ZQVertex(0, q)) for q in quiver.vertices}


def summand_is_monotone(quiver: Quiver) -> bool:
    """``dim M(x) <= dim M(tau^{-1} x)`` entrywise for non-injective ``x``."""

    window = auslander_window(quiver)
    table = summands(quiver)
    for x in window.objects:
        if x.column == 0:
            continue
        smaller = np.asarray(table[x])
        larger = np.asarray(table[ZQVertex(x.column - 1, x.vertex)])
        if np.any(smaller > larger):
            return False
    return True
