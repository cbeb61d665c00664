"""Adapted ordering, adapted word and the initial seed."""
from __future__ import annotations

from collections import Counter
from typing import Iterator

from checks.base import Identity, PropertyCheck
from dynkin.diagram import positive_root_count
from dynkin.quiver import Quiver, opposite
from dynkin.weyl import longest_on_fundamental, verify_longest_adapted
from seed import build_seed
from seed.exchange import exchangeable_from_window
from seed.minors import weight_consistency
from seed.ordering import dual_word, is_adapted, ordering_from_word


class SeedCheck(PropertyCheck):
    def _identities(self, quiver: Quiver) -> Iterator[Identity]:
        dynkin = quiver.dynkin
        n = quiver.rank
        seed = build_seed(quiver)
        ordering = seed.ordering
        word = seed.word
        r = len(word)

        yield "ordering has forward Hom vanishing", is_adapted(quiver, ordering.objects), {}
        report = verify_longest_adapted(word, quiver)
        yield "word is reduced for w0", report.is_longest, {"word": word.to_list()}
        yield "word is adapted to Q", report.is_adapted, {"word": word.to_list()}
        yield "r is the positive root count", r == positive_root_count(dynkin), {"r": r}
        yield "ordering is recovered from its word", ordering_from_word(quiver, word) == ordering, {}

        other = opposite(quiver)
        starred = verify_longest_adapted(dual_word(dynkin, word), other)
        yield "dual word is adapted to Q^op", starred.is_longest and starred.is_adapted, {}

        exchangeable = seed.exchangeable
        yield "|e| = r - n", len(exchangeable) == r - n, {"e": list(exchangeable)}
        frozen_letters = sorted(word[k - 1] for k in range(1, r + 1) if k not in set(exchangeable))
        yield "frozen positions carry each letter once", frozen_letters == list(quiver.vertices), {}
        from_window = exchangeable_from_window(quiver, ordering)
        yield "e is the set of non-projective positions", from_window == exchangeable, {
            "window": list(from_window),
            "word": list(exchangeable),
        }

        yield "B is (r+n) x (r-n)", seed.B.shape == (r + n, r - n), {"shape": list(seed.B.shape)}
        yield "B' is r x (r-n)", seed.Bprime.shape == (r, r - n), {"shape": list(seed.Bprime.shape)}
        yield "B has entries in {-1,0,1}", set(seed.B.entries.flatten().tolist()) <= {-1, 0, 1}, {}
        mismatched = [
            (k, l) for l in exchangeable for k in seed.Bprime.rows if seed.Bprime.entry(k, l) != seed.B.entry(k, l)
        ]
        yield "B' is a row restriction of B", not mismatched, {"entries": mismatched[:5]}

        images = Counter(seed.theta.values())
        target = set(range(-n, 0)) | set(exchangeable)
        yield "theta is a bijection onto frozen and exchangeable indices", set(images) == target and max(
            images.values(), default=1
        ) == 1, {}

        for label in seed.minors:
            if label.k < 0:
                expected = longest_on_fundamental(dynkin, label.fundamental)
                yield "frozen minors carry w0(varpi)", label.weight == expected, {"k": label.k}
            elif label.k not in set(exchangeable):
                expected = tuple(1 if q == label.fundamental else 0 for q in quiver.vertices)
                yield "non-exchangeable minors carry varpi", label.weight == expected, {"k": label.k}

        for check in weight_consistency(quiver, ordering):
            yield "varpi - dim M(x(j)) is the minor weight", check.passed, check.to_dict()
