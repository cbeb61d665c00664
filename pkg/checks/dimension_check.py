"""Dimension vectors and Hom dimensions computed two ways."""
from __future__ import annotations

from collections import Counter
from typing import Iterator

from checks.base import Identity, PropertyCheck
from dynkin.diagram import mu
from dynkin.quiver import Quiver
from dynkin.weyl import positive_roots
from numerics.dimensions import dimvec_table, knit_all
from numerics.euler import coxeter_power, euler_form, projective_dimvec, unit_vector
from numerics.homs import hom_matrix, trick_check
from translation.window import auslander_window
from translation.zq import ZQVertex


class DimensionCheck(PropertyCheck):
    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        window = auslander_window(quiver)
        table = dimvec_table(quiver)
        knitted = knit_all(quiver)

        for x in window.objects:
            yield "Coxeter powers agree with knitting", table[x] == knitted.get(x), {"object": str(x)}

        roots = Counter(positive_roots(quiver.dynkin))
        yield "each positive root appears once", Counter(table.values()) == roots, {}

        for q in quiver.vertices:
            last = window.exponents[q - 1]
            endpoint = table[ZQVertex(last, q)]
            expected = projective_dimvec(quiver, mu(quiver.dynkin, q))
            yield "Phi^N(q) i_q = p_mu(q)", endpoint == expected, {"q": q, "dim": list(endpoint)}

        for p in quiver.vertices:
            d = unit_vector(quiver, p)
            for q in quiver.vertices:
                w = unit_vector(quiver, q)
                form = euler_form(quiver, d, w)
                moved = euler_form(quiver, coxeter_power(quiver, 1, d), coxeter_power(quiver, 1, w))
                swapped = -euler_form(quiver, w, coxeter_power(quiver, 1, d))
                yield "Phi preserves the Euler form", form == moved, {"p": p, "q": q}
                yield "<d,w> = -<w,Phi d>", form == swapped, {"p": p, "q": q}

        trick = trick_check(quiver)
        yield "no path from short to long orbits", trick.holds, {"failure": trick.failure}

        homs = hom_matrix(quiver)
        for index, x in enumerate(window.objects):
            yield "End of an indecomposable is one-dimensional", homs[index, index] == 1, {"object": str(x)}
