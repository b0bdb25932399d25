import random

import pytest
from hypothesis import given, settings

from posetlin import kernels
from posetlin.generate import random_poset

from conftest import posets

SIGN_BACKENDS = [kernels.ideal_sign_counts_numba, kernels.ideal_sign_counts_numpy,
                 kernels.ideal_sign_counts_sparse]
MAP_BACKENDS = [kernels.count_isotone_maps_numba, kernels.count_isotone_maps_numpy]


@pytest.mark.parametrize("fn", SIGN_BACKENDS)
def test_empty_and_antichain(fn):
    assert fn([], 0) == (1, 0)
    assert fn([0, 0], 2) == (1, 1)
    assert fn([0, 0, 0], 3) == (3, 3)


@given(posets(max_size=8))
@settings(max_examples=60, deadline=None)
def test_sign_backends_agree(p):
    below = list(p.below_masks)
    results = {fn(below, len(p)) for fn in SIGN_BACKENDS}
    assert len(results) == 1


def test_sign_backends_agree_larger():
    rng = random.Random(7)
    for _ in range(5):
        p = random_poset(13, 0.3, rng)
        below = list(p.below_masks)
        assert len({fn(below, 13) for fn in SIGN_BACKENDS}) == 1


def test_dense_threshold_dispatch():
    # above the dense cut-off the arbitrary-precision path takes over
    n = kernels.DENSE_MAX + 3
    below = [(1 << i) - 1 for i in range(n)]
    assert kernels.ideal_sign_counts(below, n) == (1, 0)


def _brute_maps(n, pred, forb):
    from itertools import product
    m = len(pred)
    total = 0
    for phi in product(range(1, n + 1), repeat=m):
        ok = all(phi[j] <= phi[k] for k in range(m) for j in range(k) if pred[k] >> j & 1)
        ok = ok and all(phi[j] != phi[k] for k in range(m) for j in range(k) if forb[k] >> j & 1)
        total += ok
    return total


@pytest.mark.parametrize("fn", MAP_BACKENDS)
def test_map_counts_small(fn):
    assert fn(3, [], []) == 1
    assert fn(0, [0], [0]) == 0
    assert fn(3, [0, 1], [0, 0]) == 6
    assert fn(3, [0, 0, 0], [0, 1, 3]) == 6


def test_map_backends_match_brute_force():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(1, 4)
        pred = [0] * m
        forb = [0] * m
        for k in range(m):
            for j in range(k):
                if rng.random() < 0.4:
                    pred[k] |= 1 << j | pred[j]
                if rng.random() < 0.3:
                    forb[k] |= 1 << j
        n = rng.randint(0, 4)
        want = _brute_maps(n, pred, forb)
        assert [fn(n, pred, forb) for fn in MAP_BACKENDS] == [want, want]


def test_env_flag_selects_numpy():
    import os
    import subprocess
    import sys
    code = ("from posetlin import backend_name, group_ring_L; from posetlin.generate import n_poset; "
            "print(backend_name(), group_ring_L(n_poset()).pm)")
    env = dict(os.environ, POSETLIN_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True).stdout
    assert out.strip() == "numpy (5, 1)"
