from dynkin.diagram import DynkinType
from dynkin.weyl import fundamental_weight, longest_on_fundamental
from seed import build_seed
from seed.minors import lowering_exponents, minor_label, weight_consistency, word_suffix

A2 = DynkinType("A", 2)


def test_word_suffix():
    assert word_suffix((1, 2, 1), -2) == (1, 2, 1)
    assert word_suffix((1, 2, 1), 1) == (2, 1)
    assert word_suffix((1, 2, 1), 3) == ()


def test_minor_labels_of_a2():
    labels = {k: minor_label(A2, (1, 2, 1), k) for k in (-2, -1, 1, 2, 3)}
    assert {k: label.weight for k, label in labels.items()} == {
        -2: (-1, 0),
        -1: (0, -1),
        1: (-1, 1),
        2: (0, 1),
        3: (1, 0),
    }
    assert labels[-2].fundamental == 2
    assert labels[3].to_dict() == {"k": 3, "fundamental": 1, "weight": [1, 0]}


def test_frozen_and_last_minors(d5):
    seed = build_seed(d5)
    dynkin = d5.dynkin
    for label in seed.minors:
        if label.k < 0:
            assert label.weight == longest_on_fundamental(dynkin, label.fundamental)
        elif seed.kplus[label.k] > len(seed.word):
            assert label.weight == fundamental_weight(dynkin, label.fundamental)


def test_lowering_exponents():
    assert lowering_exponents(A2, (2, 1), (1, 0)) == (0, 1)


def test_weights_match_start_module(a2, a3, d5):
    for quiver in (a2, a3, d5):
        checks = weight_consistency(quiver, build_seed(quiver).ordering)
        assert len(checks) == len(build_seed(quiver).word)
        assert all(check.passed for check in checks), [c.to_dict() for c in checks if not c.passed]
