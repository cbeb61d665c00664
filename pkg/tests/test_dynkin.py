import numpy as np
import pytest

from dynkin.diagram import (
    DynkinType,
    all_types,
    cartan_matrix,
    coxeter_number,
    diagram_edges,
    mu,
    positive_root_count,
)
from errors import InvalidDynkinType


def test_parse_labels():
    """Labels parse case-insensitively into family and rank."""
    assert DynkinType.parse("D5") == DynkinType("D", 5)
    assert DynkinType.parse("e8").label == "E8"


@pytest.mark.parametrize("family, rank", [("B", 3), ("D", 3), ("E", 5), ("E", 9), ("A", 0)])
def test_invalid_types_are_rejected(family, rank):
    """Unknown families and out-of-range ranks raise InvalidDynkinType."""
    with pytest.raises(InvalidDynkinType):
        DynkinType(family, rank)


def test_unparseable_label():
    with pytest.raises(InvalidDynkinType, match="Cannot parse"):
        DynkinType.parse("Dx")


def test_diagram_edges_follow_fixed_labelling():
    assert diagram_edges(DynkinType("A", 4)) == ((1, 2), (2, 3), (3, 4))
    assert diagram_edges(DynkinType("D", 5)) == ((1, 2), (2, 3), (3, 4), (3, 5))
    assert diagram_edges(DynkinType("E", 6)) == ((1, 2), (2, 3), (3, 4), (3, 6), (4, 5))


def test_mu_involution():
    """The Nakayama involution flips A, the D_odd fork and the E6 arm."""
    assert [mu(DynkinType("A", 4), q) for q in range(1, 5)] == [4, 3, 2, 1]
    assert [mu(DynkinType("D", 5), q) for q in range(1, 6)] == [1, 2, 3, 5, 4]
    assert [mu(DynkinType("D", 4), q) for q in range(1, 5)] == [1, 2, 3, 4]
    assert [mu(DynkinType("E", 6), q) for q in range(1, 7)] == [5, 4, 3, 2, 1, 6]
    assert [mu(DynkinType("E", 7), q) for q in range(1, 8)] == list(range(1, 8))


def test_mu_rejects_foreign_vertex():
    with pytest.raises(InvalidDynkinType):
        mu(DynkinType("A", 3), 4)


def test_cartan_matrix_is_read_only():
    cartan = cartan_matrix(DynkinType("A", 3))
    assert np.array_equal(cartan, np.array([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]))
    with pytest.raises(ValueError):
        cartan[0, 0] = 3


@pytest.mark.parametrize(
    "label, h, roots",
    [("A1", 2, 1), ("A5", 6, 15), ("D4", 6, 12), ("D5", 8, 20), ("E6", 12, 36), ("E7", 18, 63), ("E8", 30, 120)],
)
def test_coxeter_number_and_root_count(label, h, roots):
    dynkin = DynkinType.parse(label)
    assert coxeter_number(dynkin) == h
    assert positive_root_count(dynkin) == roots
    # n h / 2 positive roots
    assert 2 * roots == dynkin.rank * h


def test_all_types_up_to_rank_six():
    labels = [dynkin.label for dynkin in all_types(6)]
    assert labels == ["A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"]
