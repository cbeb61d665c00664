"""Identities of the diagram, the Weyl group and the translation quiver."""
from __future__ import annotations

from typing import Iterator

import numpy as np

from checks.base import Identity, PropertyCheck
from dynkin.diagram import cartan_matrix, coxeter_number, mu, positive_root_count
from dynkin.quiver import Quiver
from dynkin.weyl import negate, reflection_matrix, simple_root, weyl_apply
from numerics.euler import coxeter_order, euler_matrix
from seed.ordering import adapted_ordering
from translation.window import auslander_window
from translation.zq import ZQVertex, nakayama, sigma_object, sigma_squared_shift, tau

SAMPLE_SIZE = 1000
COLUMN_SPREAD = 60


class StructureCheck(PropertyCheck):
    def __init__(self, config):
        super().__init__(config)
        self.samples = int(self.config.get("samples", SAMPLE_SIZE))

    def _sample(self, quiver: Quiver) -> Iterator[ZQVertex]:
        rng = np.random.default_rng(self.seed)
        columns = rng.integers(-COLUMN_SPREAD, COLUMN_SPREAD + 1, size=self.samples)
        vertices = rng.integers(1, quiver.rank + 1, size=self.samples)
        for column, vertex in zip(columns, vertices):
            yield ZQVertex(int(column), int(vertex))

    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        dynkin = quiver.dynkin
        h = coxeter_number(dynkin)
        window = auslander_window(quiver)

        for q in quiver.vertices:
            yield "mu is an involution", mu(dynkin, mu(dynkin, q)) == q, {"q": q}

        gram = euler_matrix(quiver)
        yield "Cartan matrix is E + E^T", np.array_equal(cartan_matrix(dynkin), gram + gram.T), {}

        for q in quiver.vertices:
            total = window.exponents[q - 1] + window.exponents[mu(dynkin, q) - 1]
            yield "N(q) + N(mu(q)) = h - 2", total == h - 2, {"q": q, "sum": total, "h": h}

        yield (
            "window size is the positive root count",
            window.size == positive_root_count(dynkin),
            {"size": window.size},
        )

        for x in window.objects:
            if window.is_projective(x):
                continue
            incoming = set(window.predecessors(x))
            outgoing = set(window.successors(tau(x)))
            yield "mesh: in(x) = out(tau x)", incoming == outgoing, {"object": str(x)}

        injective_rows = sorted(x.vertex for x in window.injectives())
        projective_rows = sorted(x.vertex for x in window.projectives())
        yield "injectives project bijectively", injective_rows == list(quiver.vertices), {}
        yield "projectives project bijectively", projective_rows == list(quiver.vertices), {}

        shift = sigma_squared_shift(quiver)
        for v in self._sample(quiver):
            twice = sigma_object(quiver, sigma_object(quiver, v))
            yield "sigma^2 is the tau^h shift", twice == tau(v, shift), {"vertex": str(v), "image": str(twice)}
            back = sigma_object(quiver, sigma_object(quiver, tau(v, -shift)))
            yield "sigma^2 after tau^-h is the identity", back == v, {"vertex": str(v)}
            yield (
                "nakayama commutes with tau",
                nakayama(quiver, tau(v)) == tau(nakayama(quiver, v)),
                {"vertex": str(v)},
            )

        identity = np.eye(quiver.rank, dtype=np.int64)
        for i in quiver.vertices:
            square = reflection_matrix(dynkin, i) @ reflection_matrix(dynkin, i)
            yield "s_i squared is the identity", np.array_equal(square, identity), {"i": i}

        word = adapted_ordering(quiver).word
        for j in quiver.vertices:
            image = weyl_apply(dynkin, word, simple_root(dynkin, j))
            expected = negate(simple_root(dynkin, mu(dynkin, j)))
            yield "w0(alpha_j) = -alpha_mu(j)", image == expected, {"j": j, "image": list(image)}

        order = coxeter_order(quiver)
        yield "Coxeter matrix has order h", order == h, {"order": order, "h": h}
