"""End-to-end identities over every orientation of every type up to rank 8."""
import pytest

from dynkin.diagram import DynkinType, all_types
from dynkin.quiver import orientations, pictured_orientation
from numerics.dimensions import dimvec_table, knit_all
from seed import build_seed
from seed.exchange import remark_ex1_check
from seed.minors import weight_consistency
from start.duality import multiset_matches
from start.module import (
    dim_end,
    dim_end_graded,
    dq_table,
    rigidity_certificate,
    summand_dimvec,
    summand_from_homs,
    summands,
)
from translation.window import auslander_window

ALL_UP_TO_8 = [quiver for dynkin in all_types(8) for quiver in orientations(dynkin)]
ALL_UP_TO_6 = [quiver for quiver in ALL_UP_TO_8 if quiver.rank <= 6]


@pytest.mark.parametrize("family, ranks", [("A", range(2, 9)), ("D", range(4, 9)), ("E", range(6, 9))])
def test_closed_forms_for_pictured_orientations(family, ranks):
    table = dq_table(family, 8)
    for rank in ranks:
        assert table[rank]["dim_end"] == table[rank]["closed_form"], rank


def test_exceptional_values():
    table = dq_table("E", 8)
    assert [table[n]["dim_end"] for n in (6, 7, 8)] == [2444, 13130, 107114]


def test_orientation_count():
    assert len(ALL_UP_TO_8) == sum(2 ** (dynkin.rank - 1) for dynkin in all_types(8))


def test_rigidity_everywhere():
    failing = [quiver.label for quiver in ALL_UP_TO_8 if not rigidity_certificate(quiver).rigid]
    assert failing == []


def test_knitting_everywhere():
    failing = [quiver.label for quiver in ALL_UP_TO_8 if knit_all(quiver) != dimvec_table(quiver)]
    assert failing == []


def test_hom_based_evaluations_up_to_rank_six():
    for quiver in ALL_UP_TO_6:
        assert dim_end(quiver) == dim_end_graded(quiver), quiver.label
        for x in summands(quiver):
            assert summand_from_homs(quiver, x) == summand_dimvec(quiver, x), (quiver.label, x)


def test_weight_consistency_everywhere():
    for quiver in ALL_UP_TO_8:
        checks = weight_consistency(quiver, build_seed(quiver).ordering)
        assert all(check.passed for check in checks), quiver.label


def test_seed_quiver_and_duality_up_to_rank_six():
    for quiver in ALL_UP_TO_6:
        seed = build_seed(quiver)
        assert remark_ex1_check(quiver, seed.ordering, seed.word.letters), quiver.label
        assert multiset_matches(quiver), quiver.label


def test_running_example_golden_values(d5):
    window = auslander_window(d5)
    seed = build_seed(d5)
    assert window.size == 20
    assert tuple(window.N[q] for q in d5.vertices) == (3, 3, 3, 4, 2)
    assert seed.word.letters == (4, 2, 1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 3, 4, 1)
    assert seed.exchangeable == tuple(range(1, 15)) + (16,)
    assert seed.B.shape == (25, 15)


def test_e6_pictured_seed():
    quiver = pictured_orientation(DynkinType("E", 6))
    seed = build_seed(quiver)
    assert len(seed.word) == 36
    assert len(seed.exchangeable) == 30
