import random

import pytest
from hypothesis import strategies as st

from posetlin.generate import diamond_lattice, n_poset
from posetlin.poset import Poset


@st.composite
def posets(draw, max_size=6):
    """Random order: pick a hidden linear order, keep a random subset of its pairs."""
    n = draw(st.integers(0, max_size))
    perm = draw(st.permutations(range(n)))
    below = [0] * n
    for j in range(n):
        for i in range(j):
            if draw(st.booleans()):
                below[perm[j]] |= 1 << perm[i] | below[perm[i]]
    return Poset.from_masks([f"x{i + 1}" for i in range(n)], below)


@pytest.fixture
def diamond():
    return diamond_lattice()


@pytest.fixture
def bowtie():
    return Poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


@pytest.fixture
def npos():
    return n_poset()


@pytest.fixture
def rng():
    return random.Random(20240611)
