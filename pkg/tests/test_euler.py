import numpy as np
import pytest

from dynkin.diagram import DynkinType, coxeter_number
from dynkin.quiver import orientations
from numerics.euler import (
    coxeter_matrix,
    coxeter_order,
    coxeter_power,
    euler_form,
    euler_matrix,
    injective_dimvec,
    projective_dimvec,
    unit_vector,
)


def test_euler_matrix_of_a2(a2):
    assert np.array_equal(euler_matrix(a2), np.array([[1, -1], [0, 1]]))
    assert euler_form(a2, (3, 2), (3, 2)) == 7


def test_coxeter_matrix_of_a2(a2):
    assert np.array_equal(coxeter_matrix(a2), np.array([[0, -1], [1, -1]]))
    assert coxeter_power(a2, 1, (1, 0)) == (0, 1)
    assert coxeter_power(a2, -1, (0, 1)) == (1, 0)


def test_injectives_and_projectives(d5):
    assert injective_dimvec(d5, 3) == (0, 1, 1, 1, 0)
    assert projective_dimvec(d5, 2) == (1, 1, 1, 0, 1)
    assert unit_vector(d5, 4) == (0, 0, 0, 1, 0)


@pytest.mark.parametrize("label", ["A3", "D4", "E6"])
def test_coxeter_order_is_h(label):
    dynkin = DynkinType.parse(label)
    for quiver in list(orientations(dynkin))[:3]:
        assert coxeter_order(quiver) == coxeter_number(dynkin)


def test_coxeter_power_cancels(d5):
    d = (1, 2, 3, 1, 1)
    assert coxeter_power(d5, -3, coxeter_power(d5, 3, d)) == d


def test_euler_form_is_coxeter_invariant(d5):
    d, w = (1, 0, 2, 1, 0), (0, 1, 1, 0, 1)
    assert euler_form(d5, coxeter_power(d5, 1, d), coxeter_power(d5, 1, w)) == euler_form(d5, d, w)
    assert euler_form(d5, d, w) == -euler_form(d5, w, coxeter_power(d5, 1, d))
