import numpy as np

from dynkin.diagram import cartan_matrix
from seed import build_seed
from seed.exchange import (
    atilde,
    btilde,
    btilde_prime,
    comparison_quiver,
    exchangeable_from_window,
    kplus_and_e,
    principal_quiver_matches_graded,
    remark_ex1_check,
    seed_indices,
)


def test_kplus_and_exchangeable_of_a2():
    kplus, exchangeable = kplus_and_e((1, 2, 1), 2)
    assert kplus == {-2: 2, -1: 1, 1: 3, 2: 4, 3: 4}
    assert exchangeable == (1,)
    assert seed_indices((1, 2, 1), 2) == (-2, -1, 1, 2, 3)


def test_exchangeable_of_linear_a3():
    _, exchangeable = kplus_and_e((1, 2, 3, 1, 2, 1), 3)
    assert exchangeable == (1, 2, 4)


def test_seed_quiver_of_a2(a2):
    arrows = atilde((1, 2, 1), cartan_matrix(a2.dynkin))
    assert arrows == ((-1, 1), (1, -2), (1, 3), (2, 1))


def test_exchange_matrices_of_a2(a2):
    cartan = cartan_matrix(a2.dynkin)
    full = btilde((1, 2, 1), cartan)
    assert full.rows == (-2, -1, 1, 2, 3)
    assert full.columns == (1,)
    assert full.to_lists() == [[-1], [1], [0], [1], [-1]]
    assert full.entry(-2, 1) == -1

    principal = btilde_prime((1, 2, 1), cartan)
    assert principal.rows == (-2, -1, 1)
    assert principal.to_lists() == [[-1], [1], [0]]


def test_seed_of_running_example(d5):
    seed = build_seed(d5)
    assert seed.exchangeable == tuple(range(1, 15)) + (16,)
    assert seed.B.shape == (25, 15)
    assert seed.Bprime.shape == (20, 15)
    assert set(np.unique(seed.B.entries)) <= {-1, 0, 1}
    assert [seed.theta[j] for j in range(1, 7)] == [-4, -2, -1, -3, -5, 1]


def test_exchangeable_from_window(a2, d5):
    assert exchangeable_from_window(a2, build_seed(a2).ordering) == (1,)
    seed = build_seed(d5)
    assert exchangeable_from_window(d5, seed.ordering) == seed.exchangeable


def test_seed_quiver_from_translation_quiver(a2, a3, d5):
    for quiver in (a2, a3, d5):
        seed = build_seed(quiver)
        assert remark_ex1_check(quiver, seed.ordering, seed.word.letters)
        assert set(comparison_quiver(quiver, seed.ordering)) == set(seed.atilde)


def test_principal_part_is_graded_quiver(a2, d5):
    for quiver in (a2, d5):
        assert principal_quiver_matches_graded(quiver, build_seed(quiver).ordering)


def test_seed_payload_keys(a2):
    payload = build_seed(a2).to_dict()
    assert payload["word"] == [1, 2, 1]
    assert payload["theta"] == {"1": -1, "2": -2, "3": 1}
    assert payload["kplus"] == {"-2": 2, "-1": 1, "1": 3, "2": 4, "3": 4}


D5_SEED_QUIVER = {
    (-5, 5), (5, 10), (5, 4), (10, 15), (10, 9), (15, 14),
    (-4, 1), (1, -3), (1, 6), (6, 4), (6, 11), (11, 9), (11, 16), (16, 14), (16, 19),
    (-3, 4), (4, 1), (4, 2), (4, -5), (4, 9), (9, 6), (9, 5), (9, 7), (9, 14),
    (14, 11), (14, 10), (14, 12), (14, 18), (18, 16),
    (-2, 2), (2, -3), (2, -1), (2, 7), (7, 4), (7, 3), (7, 12), (12, 9), (12, 8), (12, 17),
    (17, 14), (17, 13),
    (-1, 3), (3, 2), (3, 8), (8, 7), (8, 13), (13, 12), (13, 20),
}


def test_seed_quiver_of_running_example(d5):
    seed = build_seed(d5)
    assert len(seed.atilde) == 48
    assert set(seed.atilde) == D5_SEED_QUIVER
