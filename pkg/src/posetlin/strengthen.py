"""Strengthening an order so that everything outside a chain becomes a chain.

Given a chain ``S`` in ``P`` we want a stronger order in which ``|P| - S``
is totally ordered, while every element that was incomparable with some
member of ``S`` stays incomparable with some member of ``S``. Two
constructions are offered: repeated one-pair strengthenings steered by
:func:`criterion_c`, and a direct block construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotAChain, NotIncomparable, PreconditionViolated
from .poset import Poset


def _down(p: Poset, i: int) -> int:
    return p.below_masks[i] | 1 << i


def _up(p: Poset, i: int) -> int:
    return p.above_masks[i] | 1 << i


def _pair_masks(below, above, i, j):
    """Strict-down masks of the order with ``i <= j`` imposed (``i``, ``j`` incomparable)."""
    down_i = below[i] | 1 << i
    out = list(below)
    for z in range(len(below)):
        if z == j or above[j] >> z & 1:
            out[z] |= down_i
    return out


def strengthen_pair(p: Poset, x: str, y: str) -> Poset:
    """``w <= z`` iff ``w <= z`` before, or ``w <= x`` and ``y <= z``."""
    i, j = p.index(x), p.index(y)
    if i == j or p.comparable(x, y):
        raise NotIncomparable(f"{x!r} and {y!r} are comparable")
    return Poset.from_masks(p.elements, _pair_masks(p.below_masks, p.above_masks, i, j))


def _chain_mask(p: Poset, chain_S: Iterable[str], exc=NotAChain) -> int:
    labels = list(chain_S)
    mask = p.mask(labels)
    if not p.is_chain(labels):
        raise exc(f"{sorted(labels)} is not a chain")
    return mask


def _criterion(p: Poset, smask: int, i: int, j: int) -> bool:
    first = ((_down(p, i) | _up(p, j)) & smask) == smask
    second = ((_down(p, j) | _up(p, i)) & smask) == smask
    return first and not second


def criterion_c(p: Poset, chain_S: Iterable[str], x: str, y: str) -> bool:
    """True when imposing ``x <= y`` would make some element comparable with all of ``S``
    although it was incomparable with part of ``S`` before."""
    chain_S = list(chain_S)
    smask = _chain_mask(p, chain_S, PreconditionViolated)
    i, j = p.index(x), p.index(y)
    if smask >> i & 1 or smask >> j & 1:
        raise PreconditionViolated("x and y must lie outside S")
    if i == j or p.comparable(x, y):
        raise PreconditionViolated(f"{x!r} and {y!r} are comparable")
    return _criterion(p, smask, i, j)


def _loses_incomparability(old: Poset, new_below, new_above, smask: int, u: int) -> bool:
    """``u`` meets ``S`` incomparably under ``old`` but is comparable with all of ``S`` under ``new``."""
    before = (_down(old, u) | _up(old, u)) & smask
    after = (new_below[u] | new_above[u] | 1 << u) & smask
    return before != smask and after == smask


def _above_from_below(below):
    above = [0] * len(below)
    for z, m in enumerate(below):
        for w in range(len(below)):
            if m >> w & 1:
                above[w] |= 1 << z
    return above


def condition_a(p: Poset, chain_S: Iterable[str], x: str, y: str) -> bool:
    smask = _chain_mask(p, chain_S, PreconditionViolated)
    i, j = p.index(x), p.index(y)
    nb = _pair_masks(p.below_masks, p.above_masks, i, j)
    na = _above_from_below(nb)
    return any(_loses_incomparability(p, nb, na, smask, u) for u in range(len(p)))


def condition_b(p: Poset, chain_S: Iterable[str], x: str, y: str) -> bool:
    smask = _chain_mask(p, chain_S, PreconditionViolated)
    i, j = p.index(x), p.index(y)
    nb = _pair_masks(p.below_masks, p.above_masks, i, j)
    na = _above_from_below(nb)
    return any(_loses_incomparability(p, nb, na, smask, u) for u in (i, j))


@dataclass(frozen=True)
class StrengtheningResult:
    order: Poset
    method: str
    added_relations: frozenset[tuple[str, str]]


def _result(p: Poset, q: Poset, method: str) -> StrengtheningResult:
    return StrengtheningResult(q, method, q.relations() - p.relations())


def check_strengthening(p: Poset, chain_S: Iterable[str], q: Poset) -> dict[str, bool]:
    """The three properties a strengthening must have, each as a flag."""
    smask = p.mask(chain_S)
    n = len(p)
    contains = q.elements == p.elements and all(
        (p.below_masks[z] & ~q.below_masks[z]) == 0 for z in range(n))
    rest = [x for k, x in enumerate(p.elements) if not smask >> k & 1]
    rest_chain = q.is_chain(rest)
    keeps = all(
        (_down(q, u) | _up(q, u)) & smask != smask
        for u in range(n)
        if (_down(p, u) | _up(p, u)) & smask != smask
    )
    return {"contains_original": contains, "complement_is_chain": rest_chain,
            "keeps_incomparability": keeps}


def strengthen_iterative(p: Poset, chain_S: Iterable[str]) -> StrengtheningResult:
    """Order incomparable pairs outside ``S`` one at a time.

    Takes the pair ``(x, y)`` with least indices first and imposes ``x <= y``
    unless :func:`criterion_c` forbids it, in which case ``y <= x``.
    """
    smask = _chain_mask(p, chain_S)
    n = len(p)
    below = list(p.below_masks)
    above = list(p.above_masks)
    rest = [k for k in range(n) if not smask >> k & 1]
    while True:
        pair = next(((i, j) for a, i in enumerate(rest) for j in rest[a + 1:]
                     if not (below[i] >> j & 1 or below[j] >> i & 1)), None)
        if pair is None:
            break
        i, j = pair
        cur = Poset.from_masks(p.elements, below)
        if _criterion(cur, smask, i, j):
            i, j = j, i
        below = _pair_masks(below, above, i, j)
        above = _above_from_below(below)
    return _result(p, Poset.from_masks(p.elements, below), "iterative")


def _linearize_block(p: Poset, block: list[int]) -> list[int]:
    """Linear extension of ``p`` on ``block``, taking the lowest index whenever free."""
    left = set(block)
    out = []
    while left:
        k = min(e for e in left if not p.below_masks[e] & sum(1 << f for f in left))
        out.append(k)
        left.remove(k)
    return out


def felsner_blocks(p: Poset, chain_S: Iterable[str]) -> list[list[int]]:
    """Partition of ``|P| - S`` into blocks ``T_1 .. T_{2r+1}`` (0-based list, index ``t-1``)."""
    labels = list(chain_S)
    smask = _chain_mask(p, labels)
    s = [p.index(x) for x in p.sort_chain(labels)]
    r = len(s)
    blocks: list[list[int]] = [[] for _ in range(2 * r + 1)]
    for x in range(len(p)):
        if smask >> x & 1:
            continue
        incomp = [k for k, sk in enumerate(s, 1) if not (_down(p, x) | _up(p, x)) >> sk & 1]
        if incomp:
            t = 2 * max(incomp)
        else:
            t = 2 * sum(1 for sk in s if p.below_masks[x] >> sk & 1) + 1
        blocks[t - 1].append(x)
    return blocks


def strengthen_felsner(p: Poset, chain_S: Iterable[str]) -> StrengtheningResult:
    """Direct construction: blocks in sequence, each block linearized, ``S`` attached per block."""
    labels = list(chain_S)
    blocks = felsner_blocks(p, labels)
    s = [p.index(x) for x in p.sort_chain(labels)]
    els = p.elements
    rel = set(p.relations())
    line = [x for block in blocks for x in _linearize_block(p, block)]
    rel.update((els[a], els[b]) for a, b in zip(line, line[1:]))
    for t, block in enumerate(blocks, 1):
        i = t // 2
        for x in block:
            # odd t: above s_1..s_i; even t: above s_1..s_{i-1} and beside s_i
            top_below = i if t % 2 else i - 1
            for k, sk in enumerate(s, 1):
                if k <= top_below:
                    rel.add((els[sk], els[x]))
                elif k >= i + 1:
                    rel.add((els[x], els[sk]))
    return _result(p, Poset(els, rel), "felsner")


__all__ = [
    "strengthen_pair", "criterion_c", "condition_a", "condition_b",
    "StrengtheningResult", "check_strengthening", "strengthen_iterative",
    "strengthen_felsner", "felsner_blocks",
]
