import pytest

from dynkin.diagram import DynkinType
from dynkin.quiver import orientations
from start.duality import (
    dual_summand_dimvec,
    duality_report,
    graded_opposite_isomorphic,
    graded_opposite_matches,
    multiset_matches,
    opposite_object,
    pairing_matches,
)
from translation.zq import ZQVertex


def test_opposite_object(a2):
    assert opposite_object(a2, ZQVertex(0, 1)) == ZQVertex(1, 2)
    assert opposite_object(a2, ZQVertex(1, 1)) == ZQVertex(0, 2)


def test_dual_summand_of_a2(a2):
    assert dual_summand_dimvec(a2, ZQVertex(0, 2)) == (1, 1)


def test_running_example(d5):
    assert multiset_matches(d5)
    assert pairing_matches(d5)
    assert graded_opposite_matches(d5)
    assert graded_opposite_isomorphic(d5)


@pytest.mark.parametrize("label", ["A3", "D4"])
def test_duality_for_every_orientation(label):
    for quiver in orientations(DynkinType.parse(label)):
        assert duality_report(quiver).passed, quiver.label
