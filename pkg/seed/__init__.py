"""Initial seed of the cluster structure attached to a Dynkin quiver."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from loguru import logger

from dynkin.diagram import cartan_matrix
from dynkin.quiver import Quiver
from dynkin.weyl import ReducedWord
from seed.exchange import ExchangeMatrix, SeedArrow, atilde, btilde, btilde_prime, kplus_and_e, theta
from seed.minors import MinorLabel, minor_label
from seed.ordering import AdaptedOrdering, adapted_ordering


@dataclass(frozen=True)
class SeedData:
    ordering: AdaptedOrdering
    word: ReducedWord
    kplus: Mapping[int, int]
    exchangeable: Tuple[int, ...]
    atilde: Tuple[SeedArrow, ...]
    B: ExchangeMatrix
    Bprime: ExchangeMatrix
    theta: Mapping[int, int]
    minors: Tuple[MinorLabel, ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "word": self.word.to_list(),
            "e": list(self.exchangeable),
            "kplus": {str(k): v for k, v in self.kplus.items()},
            "atilde": [list(arrow) for arrow in self.atilde],
            "theta": {str(j): k for j, k in self.theta.items()},
            "B": self.B.to_lists(),
            "Brows": list(self.B.rows),
            "Bprime": self.Bprime.to_lists(),
            "Bprime_rows": list(self.Bprime.rows),
            "columns": list(self.B.columns),
            "minors": [label.to_dict() for label in self.minors],
        }


@lru_cache(maxsize=None)
def build_seed(quiver: Quiver) -> SeedData:
    ordering = adapted_ordering(quiver)
    word = ordering.word
    cartan = cartan_matrix(quiver.dynkin)
    kplus, exchangeable = kplus_and_e(word.letters, quiver.rank)
    seed = SeedData(
        ordering=ordering,
        word=word,
        kplus=kplus,
        exchangeable=exchangeable,
        atilde=atilde(word.letters, cartan),
        B=btilde(word.letters, cartan),
        Bprime=btilde_prime(word.letters, cartan),
        theta=theta(quiver, ordering),
        minors=tuple(minor_label(quiver.dynkin, word.letters, k) for k in sorted(kplus)),
    )
    logger.bind(COMPONENT_TYPE="seed", ENTITY_NAME=quiver.label).debug(
        f"Seed built: r={len(word)}, |e|={len(exchangeable)}"
    )
    return seed
