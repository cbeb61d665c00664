import pytest

from dynkin.diagram import DynkinType, coxeter_number
from dynkin.quiver import orientations
from translation.zq import (
    ZQVertex,
    nakayama,
    nakayama_inverse,
    nu_exponents,
    sigma_object,
    sigma_squared_shift,
    tau,
    zq_arrows_at,
)


def test_vertex_text():
    assert str(ZQVertex(2, 5)) == "(2,5)"
    assert tau(ZQVertex(2, 5), -3) == ZQVertex(-1, 5)


def test_arrows_at_a_vertex(a2):
    """For 1 -> 2: (i+1, 1) -> (i, 2) and (i, 2) -> (i, 1)."""
    incoming, outgoing = zq_arrows_at(a2, ZQVertex(0, 2))
    assert [(arrow.source, arrow.target) for arrow in incoming] == [(ZQVertex(1, 1), ZQVertex(0, 2))]
    assert [(arrow.source, arrow.target) for arrow in outgoing] == [(ZQVertex(0, 2), ZQVertex(0, 1))]
    assert outgoing[0].starred


def test_exponents_of_fixtures(a1, a2, a3, d5):
    assert nu_exponents(a1) == {1: 0}
    assert nu_exponents(a2) == {1: 1, 2: 0}
    assert nu_exponents(a3) == {1: 2, 2: 1, 3: 0}
    assert nu_exponents(d5) == {1: 3, 2: 3, 3: 3, 4: 4, 5: 2}


def test_nakayama_inverse(d5):
    for column in range(-5, 6):
        for q in d5.vertices:
            v = ZQVertex(column, q)
            assert nakayama_inverse(d5, nakayama(d5, v)) == v


def test_nakayama_of_running_example(d5):
    assert nakayama(d5, ZQVertex(0, 5)) == ZQVertex(4, 4)


@pytest.mark.parametrize("label", ["A4", "D5", "E6"])
def test_sigma_squared_is_tau_h(label):
    for quiver in list(orientations(DynkinType.parse(label)))[:4]:
        h = coxeter_number(quiver.dynkin)
        assert sigma_squared_shift(quiver) == h
        for q in quiver.vertices:
            v = ZQVertex(-3, q)
            assert sigma_object(quiver, sigma_object(quiver, v)) == tau(v, h)
