"""The quiver of the seed rebuilt from the translation quiver."""
from __future__ import annotations

from typing import Iterator

from checks.base import Identity, PropertyCheck
from dynkin.quiver import Quiver
from seed import build_seed
from seed.exchange import comparison_quiver, principal_quiver_matches_graded, remark_ex1_check


class RemarkCheck(PropertyCheck):
    DEFAULT_MAX_RANK = 6

    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        seed = build_seed(quiver)
        ordering = seed.ordering
        holds = remark_ex1_check(quiver, ordering, seed.word.letters)
        witness = {}
        if not holds:
            rules = set(seed.atilde)
            rebuilt = set(comparison_quiver(quiver, ordering))
            witness = {
                "only_in_rules": sorted(rules - rebuilt)[:5],
                "only_in_rebuilt": sorted(rebuilt - rules)[:5],
            }
        yield "seed quiver from word rules = seed quiver from ZQ", holds, witness
        yield "principal part is A*_Q without injective arrows", principal_quiver_matches_graded(quiver, ordering), {}
