"""Exchangeable positions, the quiver Ã_i and the exchange matrices B̃(i), B̃(i)′."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

import numpy as np

from dynkin.diagram import cartan_matrix
from dynkin.quiver import Quiver
from seed.ordering import AdaptedOrdering
from start.graded import graded_quiver
from translation.window import auslander_window
from translation.zq import ZQVertex, tau, zq_arrows_at

SeedArrow = Tuple[int, int]


@dataclass(frozen=True)
class ExchangeMatrix:
    rows: Tuple[int, ...]
    columns: Tuple[int, ...]
    entries: np.ndarray

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def entry(self, k: int, l: int) -> int:
        return int(self.entries[self.rows.index(k), self.columns.index(l)])

    def to_lists(self) -> List[List[int]]:
        return [[int(value) for value in row] for row in self.entries]


def seed_indices(word: Sequence[int], n: int) -> Tuple[int, ...]:
    """``-n, ..., -1, 1, ..., r``."""

    return tuple(range(-n, 0)) + tuple(range(1, len(word) + 1))


def extended_letters(word: Sequence[int], n: int) -> Dict[int, int]:
    """``|i_k|`` for every index, with the virtual prefix ``|i_{-j}| = j``."""

    letters = {-j: j for j in range(1, n + 1)}
    letters.update({k: letter for k, letter in enumerate(word, start=1)})
    return letters


def kplus_and_e(word: Sequence[int], n: int) -> Tuple[Dict[int, int], Tuple[int, ...]]:
    """``k+`` (next occurrence of the same letter, or ``r + 1``) and ``e(i)``."""

    r = len(word)
    letters = extended_letters(word, n)
    kplus: Dict[int, int] = {}
    pending: Dict[int, int] = {}
    for k in reversed(seed_indices(word, n)):
        kplus[k] = pending.get(letters[k], r + 1)
        pending[letters[k]] = k
    exchangeable = tuple(k for k in range(1, r + 1) if kplus[k] <= r)
    return dict(sorted(kplus.items())), exchangeable


def atilde(word: Sequence[int], cartan: np.ndarray) -> Tuple[SeedArrow, ...]:
    """Arrows of Ã_i.

    For ``k < l`` with ``{k, l}`` meeting ``e(i)``: ``k -> l`` iff ``k+ = l``;
    ``l -> k`` iff ``l < k+ < l+`` and ``a_{|i_k|, |i_l|} = -1``.
    """

    n = cartan.shape[0]
    letters = extended_letters(word, n)
    kplus, exchangeable = kplus_and_e(word, n)
    exchange_set = set(exchangeable)
    indices = seed_indices(word, n)
    arrows: List[SeedArrow] = []
    for position, k in enumerate(indices):
        for l in indices[position + 1:]:
            if k not in exchange_set and l not in exchange_set:
                continue
            if kplus[k] == l:
                arrows.append((k, l))
            elif l < kplus[k] < kplus[l] and cartan[letters[k] - 1, letters[l] - 1] == -1:
                arrows.append((l, k))
    return tuple(sorted(arrows))


def _matrix(rows: Sequence[int], columns: Sequence[int], arrows: Sequence[SeedArrow]) -> ExchangeMatrix:
    row_index = {k: a for a, k in enumerate(rows)}
    column_index = {l: b for b, l in enumerate(columns)}
    entries = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for source, target in arrows:
        if source in row_index and target in column_index:
            entries[row_index[source], column_index[target]] = 1
        if target in row_index and source in column_index:
            entries[row_index[target], column_index[source]] = -1
    entries.setflags(write=False)
    return ExchangeMatrix(tuple(rows), tuple(columns), entries)


def btilde(word: Sequence[int], cartan: np.ndarray) -> ExchangeMatrix:
    """Rows ``[-n, -1] u [1, r]``, columns ``e(i)``."""

    n = cartan.shape[0]
    _, exchangeable = kplus_and_e(word, n)
    return _matrix(seed_indices(word, n), exchangeable, atilde(word, cartan))


def btilde_prime(word: Sequence[int], cartan: np.ndarray) -> ExchangeMatrix:
    """B̃(i) without the rows of non-exchangeable ``k`` in ``[1, r]``."""

    n = cartan.shape[0]
    _, exchangeable = kplus_and_e(word, n)
    rows = tuple(range(-n, 0)) + exchangeable
    return _matrix(rows, exchangeable, atilde(word, cartan))


def theta(quiver: Quiver, ordering: AdaptedOrdering) -> Dict[int, int]:
    """``-q`` for ``x(j) = (0, q)``; otherwise the ``k`` with ``x(k) = tau^{-1} x(j)``."""

    result = {}
    for j, x in enumerate(ordering.objects, start=1):
        if x.column == 0:
            result[j] = -x.vertex
        else:
            result[j] = ordering.position(ZQVertex(x.column - 1, x.vertex))
    return result


def exchangeable_from_window(quiver: Quiver, ordering: AdaptedOrdering) -> Tuple[int, ...]:
    """Positions whose object is not projective."""

    window = auslander_window(quiver)
    return tuple(k for k, x in enumerate(ordering.objects, start=1) if not window.is_projective(x))


def _index_vertices(quiver: Quiver, ordering: AdaptedOrdering) -> Dict[int, ZQVertex]:
    """ZQ vertex of each index; ``-q`` stands for ``(-1, q)``."""

    vertices = {-q: ZQVertex(-1, q) for q in quiver.vertices}
    vertices.update({k: x for k, x in enumerate(ordering.objects, start=1)})
    return vertices


def comparison_quiver(quiver: Quiver, ordering: AdaptedOrdering) -> Tuple[SeedArrow, ...]:
    """Ã_i rebuilt from the translation and the arrows of ZQ."""

    _, exchangeable = kplus_and_e(ordering.word.letters, quiver.rank)
    exchange_set = set(exchangeable)
    vertices = _index_vertices(quiver, ordering)
    index_of = {v: k for k, v in vertices.items()}

    arrows: Set[SeedArrow] = set()
    for k, v in vertices.items():
        successor = index_of.get(tau(v))
        if successor is not None:
            arrows.add((k, successor))
        _, outgoing = zq_arrows_at(quiver, v)
        for arrow in outgoing:
            target = index_of.get(arrow.target)
            if target is not None:
                arrows.add((k, target))
    return tuple(sorted(a for a in arrows if a[0] in exchange_set or a[1] in exchange_set))


def remark_ex1_check(quiver: Quiver, ordering: AdaptedOrdering, word: Sequence[int]) -> bool:
    """Whether Ã_i from the word rules equals the comparison quiver."""

    return set(atilde(word, cartan_matrix(quiver.dynkin))) == set(comparison_quiver(quiver, ordering))


def principal_quiver(quiver: Quiver, ordering: AdaptedOrdering) -> FrozenSet[Tuple[ZQVertex, ZQVertex]]:
    """The quiver of B̃(i)′ relabelled by ``k -> x(k+)``."""

    word = ordering.word.letters
    kplus, exchangeable = kplus_and_e(word, quiver.rank)
    rows = set(range(-quiver.rank, 0)) | set(exchangeable)
    relabel = {k: ordering[kplus[k]] for k in rows}
    return frozenset(
        (relabel[source], relabel[target])
        for source, target in atilde(word, cartan_matrix(quiver.dynkin))
        if source in rows and target in rows
    )


def principal_quiver_matches_graded(quiver: Quiver, ordering: AdaptedOrdering) -> bool:
    """B̃(i)′ is the graded quiver without the arrows between injective vertices."""

    graded = graded_quiver(quiver)
    expected = frozenset(
        (source, target)
        for source, target in graded.arrows0 + graded.arrows1
        if not (source.column == 0 and target.column == 0)
    )
    return principal_quiver(quiver, ordering) == expected
