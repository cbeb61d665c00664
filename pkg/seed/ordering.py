"""Adapted orderings of the window and the adapted reduced words they give."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import islice
from typing import Dict, Iterator, Optional, Sequence, Set, Tuple

import networkx as nx

from dynkin.diagram import DynkinType, mu
from dynkin.quiver import Quiver
from dynkin.weyl import ReducedWord
from errors import InternalInconsistency, InvalidWord
from numerics.homs import hom_matrix
from translation.window import auslander_window
from translation.zq import ZQVertex, nu_exponents


@dataclass(frozen=True)
class AdaptedOrdering:
    """Window objects ``x(1), ..., x(r)``; positions are 1-based."""

    quiver: Quiver
    objects: Tuple[ZQVertex, ...]

    @property
    def word(self) -> ReducedWord:
        return ReducedWord(tuple(x.vertex for x in self.objects))

    @cached_property
    def _positions(self) -> Dict[ZQVertex, int]:
        return {x: k for k, x in enumerate(self.objects, start=1)}

    def position(self, x: ZQVertex) -> int:
        return self._positions[ZQVertex(*x)]

    def __getitem__(self, k: int) -> ZQVertex:
        """``x(k)`` for ``1 <= k <= r``."""

        if k < 1:
            raise IndexError(f"Positions start at 1, got {k}")
        return self.objects[k - 1]

    def __len__(self) -> int:
        return len(self.objects)


def coxeter_sequence(quiver: Quiver) -> Tuple[int, ...]:
    """Source sequence of Q: longest tau-orbit in the window first, then smallest label."""

    exponents = nu_exponents(quiver)
    return tuple(nx.lexicographical_topological_sort(quiver.graph, key=lambda q: (-exponents[q], q)))


@lru_cache(maxsize=None)
def adapted_ordering(quiver: Quiver) -> AdaptedOrdering:
    """The canonical adapted ordering.

    Starting at the projectives, run through the reversed ``coxeter_sequence``
    over and over; at letter ``q`` take the highest remaining object of the
    ``q`` row once all its predecessors are taken. Read backwards.
    """

    window = auslander_window(quiver)
    graph = window.graph
    letters = tuple(reversed(coxeter_sequence(quiver)))
    next_column = dict(window.N)
    taken: Set[ZQVertex] = set()
    forward = []
    while len(forward) < window.size:
        progressed = False
        for q in letters:
            if next_column[q] < 0:
                continue
            x = ZQVertex(next_column[q], q)
            if all(p in taken for p in graph.predecessors(x)):
                taken.add(x)
                forward.append(x)
                next_column[q] -= 1
                progressed = True
        if not progressed:
            raise InternalInconsistency(
                "no row of the window has an available object",
                {"quiver": quiver.label, "taken": len(forward)},
            )
    return AdaptedOrdering(quiver, tuple(reversed(forward)))


def all_adapted_orderings(quiver: Quiver, limit: Optional[int] = None) -> Iterator[AdaptedOrdering]:
    """Every reversed linear extension of the window AR quiver."""

    window = auslander_window(quiver)
    extensions = nx.all_topological_sorts(window.graph)
    for extension in islice(extensions, limit):
        yield AdaptedOrdering(quiver, tuple(reversed(extension)))


def is_adapted(quiver: Quiver, objects: Sequence[ZQVertex]) -> bool:
    """``dim Gamma(x(i), x(j)) = 0`` for all ``i < j``."""

    window = auslander_window(quiver)
    homs = hom_matrix(quiver)
    indices = [window.index(x) for x in objects]
    if sorted(indices) != list(range(window.size)):
        return False
    for a, first in enumerate(indices):
        for second in indices[a + 1:]:
            if homs[first, second] != 0:
                return False
    return True


def ordering_from_word(quiver: Quiver, word: Sequence[int]) -> AdaptedOrdering:
    """Inverse of ``AdaptedOrdering.word``: the m-th occurrence of ``q`` is ``(m-1, q)``."""

    window = auslander_window(quiver)
    seen: Counter = Counter()
    objects = []
    for letter in word:
        if letter not in quiver.vertices:
            raise InvalidWord(f"Letter {letter} is not a vertex of {quiver.dynkin.label}")
        x = ZQVertex(seen[letter], letter)
        seen[letter] += 1
        if x not in window:
            raise InvalidWord(f"Letter {letter} occurs more often than the window of {quiver.label} allows")
        objects.append(x)
    if len(objects) != window.size:
        raise InvalidWord(f"Word has {len(objects)} letters but the window has {window.size} objects")
    return AdaptedOrdering(quiver, tuple(objects))


def dual_word(dynkin: DynkinType, word: Sequence[int]) -> ReducedWord:
    """``(mu(i_r), ..., mu(i_1))``."""

    return ReducedWord(tuple(mu(dynkin, letter) for letter in reversed(tuple(word))))
