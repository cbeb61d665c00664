"""Euler form and Coxeter transformation of a Dynkin quiver."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import networkx as nx
import numpy as np
import sympy

from dynkin.quiver import Quiver
from errors import InternalInconsistency

DimVector = Tuple[int, ...]


@dataclass(frozen=True)
class EulerData:
    """Gram matrix ``E`` of the Euler form and the Coxeter matrix ``Phi``.

    ``<d, w> = d^T E w`` and ``Phi = -E^{-1} E^T``.
    """

    gram: np.ndarray
    coxeter: np.ndarray
    coxeter_inverse: np.ndarray


def _exact_inverse(matrix: np.ndarray) -> sympy.Matrix:
    return sympy.Matrix(matrix.tolist()).inv()


def _to_integer_array(matrix: sympy.Matrix) -> np.ndarray:
    array = np.array([[int(value) for value in row] for row in matrix.tolist()], dtype=np.int64)
    array.setflags(write=False)
    return array


def euler_matrix(quiver: Quiver) -> np.ndarray:
    n = quiver.rank
    gram = np.eye(n, dtype=np.int64)
    for tail, head in quiver.arrows:
        gram[tail - 1, head - 1] -= 1
    return gram


@lru_cache(maxsize=None)
def euler_data(quiver: Quiver) -> EulerData:
    gram = euler_matrix(quiver)
    gram_inverse = _exact_inverse(gram)
    transpose = sympy.Matrix(gram.T.tolist())
    coxeter = -gram_inverse * transpose
    coxeter_inverse = -(transpose.inv()) * sympy.Matrix(gram.tolist())
    gram.setflags(write=False)
    return EulerData(
        gram=gram,
        coxeter=_to_integer_array(coxeter),
        coxeter_inverse=_to_integer_array(coxeter_inverse),
    )


def euler_form(quiver: Quiver, d: Sequence[int], w: Sequence[int]) -> int:
    """``sum_i d(i) w(i) - sum_a d(t(a)) w(h(a))``."""

    gram = euler_data(quiver).gram
    return int(np.asarray(d, dtype=np.int64) @ gram @ np.asarray(w, dtype=np.int64))


def coxeter_matrix(quiver: Quiver) -> np.ndarray:
    return euler_data(quiver).coxeter


def coxeter_power(quiver: Quiver, k: int, d: Sequence[int]) -> DimVector:
    """``Phi^k d``; negative ``k`` uses the inverse."""

    data = euler_data(quiver)
    matrix = data.coxeter if k >= 0 else data.coxeter_inverse
    vector = np.asarray(d, dtype=np.int64)
    for _ in range(abs(k)):
        vector = matrix @ vector
    return tuple(int(value) for value in vector)


def injective_dimvec(quiver: Quiver, q: int) -> DimVector:
    """``i_q``: the number of paths ending at ``q`` from each vertex."""

    reach = nx.ancestors(quiver.graph, q) | {q}
    return tuple(1 if p in reach else 0 for p in quiver.vertices)


def projective_dimvec(quiver: Quiver, q: int) -> DimVector:
    """``p_q``: the number of paths starting at ``q`` to each vertex."""

    reach = nx.descendants(quiver.graph, q) | {q}
    return tuple(1 if p in reach else 0 for p in quiver.vertices)


def unit_vector(quiver: Quiver, q: int) -> DimVector:
    return tuple(1 if p == q else 0 for p in quiver.vertices)


def coxeter_order(quiver: Quiver, limit: int = 64) -> int:
    """Smallest ``k > 0`` with ``Phi^k = I``."""

    coxeter = coxeter_matrix(quiver)
    identity = np.eye(quiver.rank, dtype=np.int64)
    power = identity.copy()
    for k in range(1, limit + 1):
        power = coxeter @ power
        if np.array_equal(power, identity):
            return k
    raise InternalInconsistency(
        "the Coxeter matrix has finite order",
        {"quiver": quiver.label, "limit": limit},
    )
