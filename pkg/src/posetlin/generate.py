"""Posets for tests and exhaustive checks: random, all labelled, and one per isomorphism class."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .poset import Poset


def _labels(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


def _closed(below) -> bool:
    return all((below[b] & ~below[a]) == 0 for a in range(len(below)) for b in range(len(below))
               if below[a] >> b & 1)


def random_poset(n: int, density: float = 0.4, rng: random.Random | None = None,
                 shuffle: bool = True) -> Poset:
    """Random order on ``n`` elements; reference order shuffled unless ``shuffle`` is false."""
    rng = rng or random.Random()
    perm = list(range(n))
    if shuffle:
        rng.shuffle(perm)
    below = [0] * n
    for j in range(n):
        for i in range(j):
            if rng.random() < density:
                below[perm[j]] |= 1 << perm[i] | below[perm[i]]
    return Poset.from_masks(_labels(n), below)


def all_labelled_posets(n: int):
    """Every partial order on ``x1..xn`` (so every reference order of every shape)."""
    pairs = list(combinations(range(n), 2))
    for choice in product((0, 1, 2), repeat=len(pairs)):
        below = [0] * n
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                below[j] |= 1 << i
            elif c == 2:
                below[i] |= 1 << j
        if _closed(below):
            yield Poset.from_masks(_labels(n), below)


def _canonical(below) -> tuple:
    n = len(below)
    above = [0] * n
    for a in range(n):
        for b in range(n):
            if below[a] >> b & 1:
                above[b] |= 1 << a
    key = [(below[v].bit_count(), above[v].bit_count()) for v in range(n)]
    classes = {}
    for v in range(n):
        classes.setdefault(key[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        order = [v for grp in choice for v in grp]
        pos = {v: k for k, v in enumerate(order)}
        code = tuple(sum(1 << pos[b] for b in range(n) if below[v] >> b & 1) for v in order)
        if best is None or code < best:
            best = code
    return tuple(sorted(key)), best


def poset_catalog(n: int) -> list[Poset]:
    """One naturally labelled poset per isomorphism class on ``n`` elements."""
    level = {_canonical([]): []}
    for k in range(n):
        nxt = {}
        for below in level.values():
            # new maximal element: its strict down-set is any down-closed subset
            for sub in range(1 << k):
                if any(sub >> b & 1 and below[b] & ~sub for b in range(k)):
                    continue
                cand = list(below) + [sub]
                key = _canonical(cand)
                if key not in nxt:
                    nxt[key] = cand
        level = nxt
    return [Poset.from_masks(_labels(n), b) for b in level.values()]


def n_poset() -> Poset:
    """The N shape: a < b > c < d."""
    return Poset(["a", "b", "c", "d"], [("a", "b"), ("c", "b"), ("c", "d")])


def diamond_lattice() -> Poset:
    """Bottom, two incomparable middles, top."""
    return Poset(["0", "l", "r", "1"], [("0", "l"), ("0", "r"), ("l", "1"), ("r", "1")])
