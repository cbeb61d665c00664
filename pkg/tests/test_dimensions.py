from dynkin.diagram import mu
from dynkin.weyl import positive_roots
from numerics.dimensions import coxeter_orbit, dimvec_rows, dimvec_table, knit_all
from numerics.euler import coxeter_power, injective_dimvec, projective_dimvec
from translation.window import auslander_window
from translation.zq import ZQVertex


def test_dimension_vectors_of_a2(a2):
    table = dimvec_table(a2)
    assert table == {
        ZQVertex(0, 1): (1, 0),
        ZQVertex(1, 1): (0, 1),
        ZQVertex(0, 2): (1, 1),
    }
    assert dimvec_rows(table) == ((0, 1, 1, 0), (1, 1, 0, 1), (0, 2, 1, 1))


def test_coxeter_orbit(a2):
    assert coxeter_orbit(a2, 1, 1) == ((1, 0), (0, 1))


def test_knitting_agrees_with_coxeter_powers(a3, d5):
    assert knit_all(a3) == dimvec_table(a3)
    assert knit_all(d5) == dimvec_table(d5)


def test_every_positive_root_once(d5):
    dims = sorted(dimvec_table(d5).values())
    assert dims == sorted(positive_roots(d5.dynkin))


def test_last_translate_of_injective_is_projective(d5):
    window = auslander_window(d5)
    for q in d5.vertices:
        last = coxeter_power(d5, window.N[q], injective_dimvec(d5, q))
        assert last == projective_dimvec(d5, mu(d5.dynkin, q))


# Rows of each entry: (d1 d2 / d3 d4 / d5).
D5_DIMENSION_VECTORS = {
    (0, 1): (1, 1, 0, 0, 0),
    (1, 1): (0, 0, 1, 1, 0),
    (2, 1): (0, 1, 1, 0, 1),
    (3, 1): (1, 0, 0, 0, 0),
    (0, 2): (0, 1, 0, 0, 0),
    (1, 2): (1, 1, 1, 1, 0),
    (2, 2): (0, 1, 2, 1, 1),
    (3, 2): (1, 1, 1, 0, 1),
    (0, 3): (0, 1, 1, 1, 0),
    (1, 3): (1, 2, 2, 1, 1),
    (2, 3): (1, 1, 2, 1, 1),
    (3, 3): (0, 0, 1, 0, 1),
    (0, 4): (0, 0, 0, 1, 0),
    (1, 4): (0, 1, 1, 0, 0),
    (2, 4): (1, 1, 1, 1, 1),
    (3, 4): (0, 0, 1, 0, 0),
    (4, 4): (0, 0, 0, 0, 1),
    (0, 5): (0, 1, 1, 1, 1),
    (1, 5): (1, 1, 1, 0, 0),
    (2, 5): (0, 0, 1, 1, 1),
}


def test_dimension_vectors_of_running_example(d5):
    expected = {ZQVertex(*x): dims for x, dims in D5_DIMENSION_VECTORS.items()}
    assert dimvec_table(d5) == expected
    assert knit_all(d5) == expected
