from hypothesis import given, seed, settings
from hypothesis import strategies as st

from dynkin.diagram import all_types, coxeter_number, mu, positive_root_count
from dynkin.quiver import opposite, orientations
from dynkin.weyl import verify_longest_adapted
from numerics.dimensions import dimvec_table, knit_all
from numerics.euler import coxeter_power, euler_form
from seed import build_seed
from seed.exchange import remark_ex1_check
from seed.minors import weight_consistency
from seed.ordering import dual_word, ordering_from_word
from start.module import dim_end, dim_end_graded, rigidity_certificate, total_dimvec, total_dimvec_formula
from translation.window import auslander_window
from translation.zq import ZQVertex, nakayama, tau

QUIVERS = [quiver for dynkin in all_types(5) for quiver in orientations(dynkin)]

quivers = st.sampled_from(QUIVERS)


@seed(20240)
@settings(max_examples=40, deadline=None)
@given(quivers)
def test_window_exponents(quiver):
    window = auslander_window(quiver)
    h = coxeter_number(quiver.dynkin)
    for q in quiver.vertices:
        assert window.N[q] + window.N[mu(quiver.dynkin, q)] == h - 2
    assert window.size == positive_root_count(quiver.dynkin)


@seed(20240)
@settings(max_examples=40, deadline=None)
@given(quivers, st.integers(-40, 40), st.data())
def test_nakayama_commutes_with_tau(quiver, column, data):
    q = data.draw(st.sampled_from(list(quiver.vertices)))
    v = ZQVertex(column, q)
    assert nakayama(quiver, tau(v)) == tau(nakayama(quiver, v))


@seed(20240)
@settings(max_examples=40, deadline=None)
@given(quivers)
def test_start_module_is_rigid(quiver):
    assert knit_all(quiver) == dimvec_table(quiver)
    assert total_dimvec(quiver) == total_dimvec_formula(quiver)
    assert dim_end(quiver) == dim_end_graded(quiver)
    assert rigidity_certificate(quiver).rigid


@seed(20240)
@settings(max_examples=40, deadline=None)
@given(quivers)
def test_seed_invariants(quiver):
    seed_data = build_seed(quiver)
    word = seed_data.word
    report = verify_longest_adapted(word, quiver)
    assert report.is_longest and report.is_adapted
    assert len(seed_data.exchangeable) == len(word) - quiver.rank
    assert sorted(seed_data.theta.values()) == sorted(
        [-q for q in quiver.vertices] + [k for k in range(1, len(word) + 1) if k in seed_data.exchangeable]
    )
    assert ordering_from_word(quiver, word) == seed_data.ordering
    assert verify_longest_adapted(dual_word(quiver.dynkin, word), opposite(quiver)).is_adapted
    assert remark_ex1_check(quiver, seed_data.ordering, word.letters)
    assert all(check.passed for check in weight_consistency(quiver, seed_data.ordering))


@seed(20240)
@settings(max_examples=60, deadline=None)
@given(quivers, st.data())
def test_euler_form_identities(quiver, data):
    vectors = st.lists(st.integers(-5, 5), min_size=quiver.rank, max_size=quiver.rank)
    d = data.draw(vectors)
    w = data.draw(vectors)
    moved_d = coxeter_power(quiver, 1, d)
    assert euler_form(quiver, moved_d, coxeter_power(quiver, 1, w)) == euler_form(quiver, d, w)
    assert euler_form(quiver, d, w) == -euler_form(quiver, w, moved_d)
