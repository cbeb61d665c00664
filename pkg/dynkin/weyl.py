"""Weyl group arithmetic on the weight lattice.

Weights are integer tuples in the basis of fundamental weights. The simple
root ``alpha_i`` is row ``i`` of the Cartan matrix in these coordinates, so
``lambda(h_i)`` is just ``lambda[i - 1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np
import sympy

from dynkin.diagram import DynkinType, cartan_matrix, mu, positive_root_count
from dynkin.quiver import Quiver, reflect_quiver
from errors import InvalidWord, ValidationError

WeightVector = Tuple[int, ...]
RootVector = Tuple[int, ...]


@dataclass(frozen=True)
class ReducedWord:
    """A word ``(i_1, ..., i_r)``; acts as ``s_{i_1} ... s_{i_r}``."""

    letters: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def to_list(self):
        return list(self.letters)


@dataclass(frozen=True)
class WordReport:
    is_longest: bool
    is_adapted: bool


def _check_letters(dynkin: DynkinType, letters: Iterable[int]) -> None:
    for letter in letters:
        if letter not in dynkin.vertices:
            raise InvalidWord(f"Letter {letter} is not a vertex of {dynkin.label}")


def fundamental_weight(dynkin: DynkinType, i: int) -> WeightVector:
    return tuple(1 if q == i else 0 for q in dynkin.vertices)


def simple_root(dynkin: DynkinType, i: int) -> WeightVector:
    return tuple(int(value) for value in cartan_matrix(dynkin)[i - 1])


def reflect(dynkin: DynkinType, i: int, weight: Sequence[int]) -> WeightVector:
    """``s_i(lambda) = lambda - lambda(h_i) alpha_i``."""

    row = cartan_matrix(dynkin)[i - 1]
    coefficient = weight[i - 1]
    return tuple(int(value - coefficient * alpha) for value, alpha in zip(weight, row))


def reflection_matrix(dynkin: DynkinType, i: int) -> np.ndarray:
    """Matrix of ``s_i`` acting on column vectors of weight coordinates."""

    n = dynkin.rank
    matrix = np.eye(n, dtype=np.int64)
    matrix[:, i - 1] -= cartan_matrix(dynkin)[i - 1]
    return matrix


def weyl_apply(dynkin: DynkinType, word: Iterable[int], weight: Sequence[int]) -> WeightVector:
    """Apply ``s_{i_1} ... s_{i_k}`` to ``weight``; the last letter acts first."""

    letters = tuple(word)
    _check_letters(dynkin, letters)
    result = tuple(int(value) for value in weight)
    for letter in reversed(letters):
        result = reflect(dynkin, letter, result)
    return result


def negate(weight: Sequence[int]) -> WeightVector:
    return tuple(-int(value) for value in weight)


def longest_on_fundamental(dynkin: DynkinType, i: int) -> WeightVector:
    """``w_0(varpi_i) = -varpi_{mu(i)}``."""

    return negate(fundamental_weight(dynkin, mu(dynkin, i)))


@lru_cache(maxsize=None)
def _inverse_cartan(dynkin: DynkinType) -> sympy.Matrix:
    return sympy.Matrix(cartan_matrix(dynkin).tolist()).inv()


def root_coordinates(dynkin: DynkinType, weight: Sequence[int]) -> RootVector:
    """Coefficients of ``weight`` in the simple-root basis.

    Raises ValidationError when ``weight`` is not in the root lattice.
    """

    coefficients = _inverse_cartan(dynkin) * sympy.Matrix([int(value) for value in weight])
    result = []
    for value in coefficients:
        if not value.is_integer:
            raise ValidationError(f"Weight {tuple(weight)} is not in the root lattice of {dynkin.label}")
        result.append(int(value))
    return tuple(result)


def weight_from_roots(dynkin: DynkinType, coefficients: Sequence[int]) -> WeightVector:
    """``sum_q c_q alpha_q`` in weight coordinates."""

    vector = np.asarray(coefficients, dtype=np.int64) @ cartan_matrix(dynkin)
    return tuple(int(value) for value in vector)


@lru_cache(maxsize=None)
def positive_roots(dynkin: DynkinType) -> Tuple[RootVector, ...]:
    """Positive roots in simple-root coordinates, closed under reflections."""

    cartan = cartan_matrix(dynkin)
    n = dynkin.rank
    simple = [tuple(1 if q == i else 0 for q in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        root = frontier.pop()
        for i in range(n):
            pairing = int(sum(root[j] * cartan[j, i] for j in range(n)))
            image = tuple(root[j] - (pairing if j == i else 0) for j in range(n))
            if all(value >= 0 for value in image) and image not in found:
                found.add(image)
                frontier.append(image)
    return tuple(sorted(found))


def is_longest_word(dynkin: DynkinType, word: Sequence[int]) -> bool:
    if len(word) != positive_root_count(dynkin):
        return False
    for j in dynkin.vertices:
        image = weyl_apply(dynkin, word, simple_root(dynkin, j))
        if image != negate(simple_root(dynkin, mu(dynkin, j))):
            return False
    return True


def is_adapted_word(quiver: Quiver, word: Sequence[int]) -> bool:
    """Every letter is a source of the quiver reflected at the previous letters."""

    current = quiver
    for letter in word:
        if not current.is_source(letter):
            return False
        current = reflect_quiver(current, letter)
    return True


def verify_longest_adapted(word: Sequence[int], quiver: Quiver) -> WordReport:
    letters = tuple(word)
    _check_letters(quiver.dynkin, letters)
    return WordReport(
        is_longest=is_longest_word(quiver.dynkin, letters),
        is_adapted=is_adapted_word(quiver, letters),
    )
