"""Hom dimensions against paths modulo the mesh ideal; small types only."""
from __future__ import annotations

from typing import Iterator

import numpy as np

from checks.base import Identity, PropertyCheck
from dynkin.quiver import Quiver
from numerics.homs import hom_matrix, path_count_matrix
from translation.window import auslander_window


class MeshOracleCheck(PropertyCheck):
    DEFAULT_MAX_RANK = 4

    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        window = auslander_window(quiver)
        oracle = path_count_matrix(quiver, window.objects)
        formula = hom_matrix(quiver)
        differing = [
            [str(window.objects[a]), str(window.objects[b])] for a, b in zip(*np.nonzero(oracle != formula))
        ]
        yield "Hom formula = paths modulo mesh relations", not differing, {"pairs": differing[:5]}
