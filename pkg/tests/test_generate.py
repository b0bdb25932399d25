import random

from posetlin.generate import all_labelled_posets, poset_catalog, random_poset
from posetlin.lexsum import is_series_parallel


def test_labelled_counts():
    assert [sum(1 for _ in all_labelled_posets(n)) for n in range(5)] == [1, 1, 3, 19, 219]


def test_catalog_counts():
    assert [len(poset_catalog(n)) for n in range(7)] == [1, 1, 2, 5, 16, 63, 318]


def test_catalog_naturally_labelled():
    for p in poset_catalog(5):
        assert all(m < 1 << i for i, m in enumerate(p.below_masks))


def test_series_parallel_counts():
    # series-parallel posets up to isomorphism: 1, 2, 5, 15, 48
    assert [sum(is_series_parallel(p) for p in poset_catalog(n)) for n in range(1, 6)] == [1, 2, 5, 15, 48]


def test_random_poset_is_closed():
    rng = random.Random(1)
    for _ in range(50):
        p = random_poset(rng.randint(0, 8), rng.random(), rng)
        for i, m in enumerate(p.below_masks):
            assert not m >> i & 1
            assert all(p.below_masks[j] & ~m == 0 for j in range(len(p)) if m >> j & 1)
