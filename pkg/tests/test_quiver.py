import pytest

from dynkin.diagram import DynkinType
from dynkin.quiver import (
    build_quiver,
    opposite,
    orientations,
    parse_arrows,
    pictured_orientation,
    quiver_from_dict,
    reflect_quiver,
)
from errors import EdgeMismatch, NotASource


def test_parse_arrows():
    assert parse_arrows("4>3, 3>5,2>3,2>1") == [(4, 3), (3, 5), (2, 3), (2, 1)]
    assert parse_arrows("") == []


@pytest.mark.parametrize("text", ["1-2", "1>2>3", "a>b", "1>"])
def test_parse_arrows_rejects_malformed(text):
    with pytest.raises(EdgeMismatch, match="Cannot parse arrow"):
        parse_arrows(text)


def test_running_example(d5):
    """Arrows are stored sorted and the label reproduces them."""
    assert d5.arrows == ((2, 1), (2, 3), (3, 5), (4, 3))
    assert d5.label == "D5[2>1,2>3,3>5,4>3]"
    assert d5.sources() == (2, 4)


@pytest.mark.parametrize(
    "arrows, message",
    [
        ([(1, 3), (2, 3)], "does not lie on an edge"),
        ([(1, 2), (2, 1)], "oriented more than once"),
        ([(1, 2)], "Edges without orientation"),
        ([(1, 1), (2, 3)], "Loop"),
        ([(1, 2), (2, 7)], "not a vertex"),
    ],
)
def test_build_quiver_rejects_bad_orientations(arrows, message):
    with pytest.raises(EdgeMismatch, match=message):
        build_quiver(DynkinType("A", 3), arrows)


def test_orientations_are_distinct():
    dynkin = DynkinType("D", 5)
    quivers = list(orientations(dynkin))
    assert len(quivers) == 2 ** 4
    assert len(set(quivers)) == 2 ** 4


def test_reflection_at_a_source(a3):
    reflected = reflect_quiver(a3, 1)
    assert reflected.arrows == ((2, 1), (2, 3))
    with pytest.raises(NotASource):
        reflect_quiver(a3, 2)


def test_opposite_is_an_involution(d5):
    assert opposite(opposite(d5)) == d5
    assert opposite(d5).arrows == ((1, 2), (3, 2), (3, 4), (5, 3))


def test_dict_round_trip(d5):
    payload = d5.to_dict()
    assert payload == {"type": "D", "rank": 5, "arrows": [[2, 1], [2, 3], [3, 5], [4, 3]]}
    assert quiver_from_dict(payload) == d5


def test_pictured_orientations():
    """A and D point away from 1; E points towards the branch vertex."""
    assert pictured_orientation(DynkinType("A", 3)).arrows == ((1, 2), (2, 3))
    assert pictured_orientation(DynkinType("D", 4)).arrows == ((1, 2), (2, 3), (2, 4))
    assert pictured_orientation(DynkinType("E", 6)).arrows == ((1, 2), (2, 3), (4, 3), (5, 4), (6, 3))
