"""Dimension-level duality between Q and its opposite."""
from __future__ import annotations

from typing import Iterator

from checks.base import Identity, PropertyCheck
from dynkin.quiver import Quiver
from start.duality import graded_opposite_matches, multiset_matches, pairing_matches


class DualityCheck(PropertyCheck):
    DEFAULT_MAX_RANK = 6

    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        yield "dual summands match the summands of Q^op", multiset_matches(quiver), {}
        yield "dual summands pair with Q^op summands object by object", pairing_matches(quiver), {}
        yield "graded quiver of Q^op is the opposite", graded_opposite_matches(quiver), {}
