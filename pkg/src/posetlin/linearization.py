"""Linear extensions, their signs, and the two-element group-ring count.

Signs are taken relative to the poset's element order: a linearization is
even when the permutation carrying the element order to it is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import Overflow, PosetError
from .kernels import ideal_sign_counts
from .poset import Poset, is_bicoloring, maximal_chains

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True)
class GroupRingElement:
    """``even + odd*z`` in the group ring of the two-element group ``{1, z}``."""

    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError("group-ring counts must be nonnegative")

    @property
    def plus(self) -> int:
        return self.even + self.odd

    @property
    def minus(self) -> int:
        return self.even - self.odd

    @property
    def pm(self) -> tuple[int, int]:
        return self.plus, self.minus

    @classmethod
    def from_pm(cls, plus: int, minus: int) -> GroupRingElement:
        if (plus - minus) % 2 or abs(minus) > plus:
            raise ValueError(f"({plus}, {minus}) is not the image of a nonnegative element")
        return cls((plus + minus) // 2, (plus - minus) // 2)

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return group_ring_multiply(self, other)

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        return GroupRingElement(self.even + other.even, self.odd + other.odd)

    def __str__(self):
        return f"{self.even}+{self.odd}z"


ONE = GroupRingElement(1, 0)


def group_ring_multiply(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(x.even * y.even + x.odd * y.odd, x.even * y.odd + x.odd * y.even)


@dataclass(frozen=True)
class Linearization:
    order: tuple[str, ...]
    sign: int


def permutation_sign(reference, sequence) -> int:
    """Sign of the permutation taking ``reference`` to ``sequence``."""
    pos = {x: i for i, x in enumerate(reference)}
    seq = [pos[x] for x in sequence]
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def enumerate_linearizations(p: Poset, limit: int | None = DEFAULT_LIMIT) -> Iterator[Linearization]:
    """Yield every linear extension of ``p`` with its sign.

    Backtracks over the currently minimal elements. The sign is carried along
    by counting, at each step, the already placed elements that the chosen
    element overtakes in the reference order. Raises :class:`Overflow` once
    more than ``limit`` extensions have been found.
    """
    n = len(p)
    below = p.below_masks
    els = p.elements
    placed = 0
    seq: list[int] = []
    found = 0

    def rec(placed, parity):
        nonlocal found
        if len(seq) == n:
            found += 1
            if limit is not None and found > limit:
                raise Overflow(f"more than {limit} linearizations")
            yield Linearization(tuple(els[i] for i in seq), -1 if parity else 1)
            return
        for e in range(n):
            if placed >> e & 1 or below[e] & ~placed:
                continue
            seq.append(e)
            yield from rec(placed | 1 << e, parity ^ ((placed >> (e + 1)).bit_count() & 1))
            seq.pop()

    yield from rec(placed, 0)


def group_ring_L(p: Poset, limit: int | None = None) -> GroupRingElement:
    """Even and odd linear-extension counts of ``p``.

    Counted by dynamic programming over down-sets, not by listing extensions;
    ``limit`` only bounds the reported total.
    """
    even, odd = ideal_sign_counts(p.below_masks, len(p))
    if limit is not None and even + odd > limit:
        raise Overflow(f"{even + odd} linearizations exceed limit {limit}")
    return GroupRingElement(even, odd)


def imbalance_via_bicoloring(p: Poset, coloring: Mapping[str, int]) -> int:
    """Signed count of the linearizations whose consecutive elements alternate colour."""
    if not is_bicoloring(p, coloring):
        raise PosetError("not a bicoloring of this poset")
    n = len(p)
    if n == 0:
        return 1
    below = p.below_masks
    col = [coloring[x] for x in p.elements]
    # state: (placed mask, colour of the last placed element) -> signed count
    layer = {(0, -1): 1}
    for _ in range(n):
        nxt = {}
        for (mask, last), val in layer.items():
            for e in range(n):
                if mask >> e & 1 or below[e] & ~mask or col[e] == last:
                    continue
                s = -val if (mask >> (e + 1)).bit_count() & 1 else val
                key = (mask | 1 << e, col[e])
                nxt[key] = nxt.get(key, 0) + s
        layer = nxt
    return sum(layer.values())


def stanley_balance_test(p: Poset) -> bool:
    """True when every maximal chain has one cardinality parity, opposite to ``|P|``'s."""
    parities = {len(c) % 2 for c in maximal_chains(p)}
    return len(parities) == 1 and parities.pop() != len(p) % 2
