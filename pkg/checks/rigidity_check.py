"""The start module: rigidity certificate and the agreeing evaluations behind it."""
from __future__ import annotations

from typing import Iterator

from checks.base import Identity, PropertyCheck
from dynkin.diagram import mu
from dynkin.quiver import Quiver
from dynkin.weyl import fundamental_weight, root_coordinates
from numerics.dimensions import coxeter_orbit
from start.graded import COMMUTATIVITY, MESH, ZERO, graded_quiver
from start.module import (
    dim_end,
    dim_end_graded,
    dim_end_staircase,
    injective_summand_roots,
    rigidity_certificate,
    summand_dimvec,
    summand_from_homs,
    summand_is_monotone,
    total_dimvec,
    total_dimvec_formula,
)
from translation.window import auslander_window


class RigidityCheck(PropertyCheck):
    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        window = auslander_window(quiver)
        certificate = rigidity_certificate(quiver)
        yield "<dim M, dim M> = dim End", certificate.rigid, certificate.to_dict()

        binomial = dim_end(quiver)
        staircase = dim_end_staircase(quiver)
        graded = dim_end_graded(quiver)
        yield "binomial and staircase dim End agree", binomial == staircase, {"binomial": binomial, "staircase": staircase}
        yield "binomial and graded dim End agree", binomial == graded, {"binomial": binomial, "graded": graded}

        total = total_dimvec(quiver)
        formula = total_dimvec_formula(quiver)
        yield "sum of summands is dim M", total == formula, {"sum": list(total), "formula": list(formula)}

        weighted = 0
        for q in quiver.vertices:
            last = window.exponents[q - 1]
            weighted += sum((i + 1) * sum(image) for i, image in enumerate(coxeter_orbit(quiver, q, last)))
        yield "|dim M| = sum (i+1)|Phi^i i_q|", sum(total) == weighted, {"size": sum(total), "weighted": weighted}

        for x in window.objects:
            ours = summand_dimvec(quiver, x)
            oracle = summand_from_homs(quiver, x)
            yield "summand from Coxeter powers = summand from Homs", ours == oracle, {"object": str(x)}

        yield "summands grow along tau^-1", summand_is_monotone(quiver), {}

        dynkin = quiver.dynkin
        for q, vector in injective_summand_roots(quiver).items():
            top = fundamental_weight(dynkin, q)
            bottom = fundamental_weight(dynkin, mu(dynkin, q))
            expected = root_coordinates(dynkin, tuple(a + b for a, b in zip(top, bottom)))
            yield "M(0,q) is the injective of q", vector == expected, {"q": q, "dim": list(vector)}

        graded_q = graded_quiver(quiver)
        non_projective = window.size - quiver.rank
        yield "one degree-1 arrow per non-projective", len(graded_q.arrows1) == non_projective, {}
        sources = sorted(source for source, _ in graded_q.arrows1)
        others = sorted(x for x in window.objects if not window.is_projective(x))
        yield "projectives have no degree-1 arrow", sources == others, {}
        yield "one mesh relation per non-projective", len(graded_q.relations_of(MESH)) == non_projective, {}

        degree_one = len(graded_q.relations_of(COMMUTATIVITY)) + len(graded_q.relations_of(ZERO))
        expected_one = sum(1 for source, _ in window.arrows if not window.is_injective(source))
        yield "degree-1 relations match arrows from non-injectives", degree_one == expected_one, {
            "relations": degree_one,
            "arrows": expected_one,
        }
        for relation in graded_q.relations_of(ZERO):
            yield "zero relations start at projectives", window.is_projective(relation.source), {
                "source": str(relation.source)
            }
