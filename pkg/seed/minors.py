"""Weight labels of the initial minors and their match with the start module."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from dynkin.diagram import DynkinType
from dynkin.quiver import Quiver
from dynkin.weyl import (
    WeightVector,
    fundamental_weight,
    reflect,
    weight_from_roots,
    weyl_apply,
)
from seed.exchange import extended_letters, theta
from seed.ordering import AdaptedOrdering
from start.module import summands


@dataclass(frozen=True)
class MinorLabel:
    k: int
    fundamental: int
    weight: WeightVector

    def to_dict(self) -> Dict[str, object]:
        return {"k": self.k, "fundamental": self.fundamental, "weight": list(self.weight)}


@dataclass(frozen=True)
class WeightCheck:
    j: int
    k: int
    fundamental: int
    expected: WeightVector
    observed: WeightVector
    exponents: Tuple[int, ...]
    exponents_match: bool

    @property
    def passed(self) -> bool:
        return self.expected == self.observed and self.exponents_match

    def to_dict(self) -> Dict[str, object]:
        return {
            "j": self.j,
            "k": self.k,
            "fundamental": self.fundamental,
            "expected": list(self.expected),
            "observed": list(self.observed),
            "passed": self.passed,
        }


def word_suffix(word: Sequence[int], k: int) -> Tuple[int, ...]:
    """Letters after position ``k``; the whole word for a virtual ``k < 0``."""

    return tuple(word[max(k, 0):])


def minor_label(dynkin: DynkinType, word: Sequence[int], k: int) -> MinorLabel:
    """``v_{>k}(varpi_{|i_k|})`` where ``v_{>k} = s_{i_r} ... s_{i_{k+1}}``."""

    fundamental = extended_letters(word, dynkin.rank)[k]
    suffix = word_suffix(word, k)
    weight = weyl_apply(dynkin, tuple(reversed(suffix)), fundamental_weight(dynkin, fundamental))
    return MinorLabel(k=k, fundamental=fundamental, weight=weight)


def lowering_exponents(dynkin: DynkinType, letters: Sequence[int], weight: Sequence[int]) -> Tuple[int, ...]:
    """``b_k = (s_{i_{k-1}} ... s_{i_1} lambda)(h_{i_k})``, the first letter acting first."""

    current = tuple(int(value) for value in weight)
    exponents = []
    for letter in letters:
        exponents.append(current[letter - 1])
        current = reflect(dynkin, letter, current)
    return tuple(exponents)


def exponent_totals(dynkin: DynkinType, letters: Sequence[int], exponents: Sequence[int]) -> Tuple[int, ...]:
    """Exponents summed per letter, as a vector over the vertices."""

    totals = [0] * dynkin.rank
    for letter, exponent in zip(letters, exponents):
        totals[letter - 1] += exponent
    return tuple(totals)


def weight_consistency(quiver: Quiver, ordering: AdaptedOrdering) -> Tuple[WeightCheck, ...]:
    """``varpi_i - dim M(x(j))`` against the weight of the minor ``theta(j)``."""

    dynkin = quiver.dynkin
    word = ordering.word.letters
    mapping = theta(quiver, ordering)
    table = summands(quiver)
    checks = []
    for j, x in enumerate(ordering.objects, start=1):
        k = mapping[j]
        label = minor_label(dynkin, word, k)
        dimension = table[x]
        lowered = weight_from_roots(dynkin, dimension)
        top = fundamental_weight(dynkin, label.fundamental)
        observed = tuple(a - b for a, b in zip(top, lowered))
        suffix = word_suffix(word, k)
        exponents = lowering_exponents(dynkin, suffix, top)
        exponents_match = min(exponents, default=0) >= 0 and exponent_totals(dynkin, suffix, exponents) == dimension
        checks.append(
            WeightCheck(
                j=j,
                k=k,
                fundamental=label.fundamental,
                expected=label.weight,
                observed=observed,
                exponents=exponents,
                exponents_match=exponents_match,
            )
        )
    return tuple(checks)
