"""Lexicographic sums of posets and the closed forms for their counts.

``lex_sum(base, parts)`` replaces each base element by a whole poset. Part
elements are namespaced as ``"<base label>/<part label>"``. The reference
order runs through the parts in base order and through each part in its own
order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Sequence, Union

from .errors import LabelCollision, ParseError, PosetError
from .kernels import ideal_sign_counts
from .linearization import ONE, GroupRingElement, group_ring_L, permutation_sign
from .poset import Poset, antichain_poset, chain_poset

SEP = "/"


@dataclass(frozen=True)
class LexSumSpec:
    base: Poset
    parts: tuple[Poset, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) != len(self.base):
            raise PosetError(f"{len(self.base)} base elements but {len(self.parts)} parts")


@dataclass(frozen=True)
class ChainSizesQuery:
    base: Poset
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(m) for m in self.sizes))
        if len(self.sizes) != len(self.base):
            raise PosetError(f"{len(self.base)} base elements but {len(self.sizes)} sizes")
        if any(m < 0 for m in self.sizes):
            raise PosetError("chain sizes must be nonnegative")


def lex_sum(spec: LexSumSpec) -> Poset:
    base, parts = spec.base, spec.parts
    labels = []
    offsets = []
    for x, part in zip(base.elements, parts):
        offsets.append(len(labels))
        labels.extend(f"{x}{SEP}{y}" for y in part.elements)
    if len(set(labels)) != len(labels):
        raise LabelCollision("namespaced part labels collide")
    block = [((1 << len(part)) - 1) << off for part, off in zip(parts, offsets)]
    below = []
    for i, (part, off) in enumerate(zip(parts, offsets)):
        outer = 0
        bm = base.below_masks[i]
        for j in range(len(base)):
            if bm >> j & 1:
                outer |= block[j]
        below.extend(outer | (m << off) for m in part.below_masks)
    return Poset.from_masks(labels, below)


def chain_sum_masks(base: Poset, sizes: Sequence[int]) -> list[int]:
    """Strict-down-set masks of the lexicographic sum of chains of the given sizes."""
    below = []
    starts = []
    total = 0
    for m in sizes:
        starts.append(total)
        total += m
    block = [((1 << m) - 1) << s for m, s in zip(sizes, starts)]
    for i, (m, s) in enumerate(zip(sizes, starts)):
        outer = 0
        bm = base.below_masks[i]
        for j in range(len(base)):
            if bm >> j & 1:
                outer |= block[j]
        below.extend(outer | (((1 << k) - 1) << s) for k in range(m))
    return below


def chain_sum_poset(base: Poset, sizes: Sequence[int]) -> Poset:
    q = ChainSizesQuery(base, sizes)
    return lex_sum(LexSumSpec(q.base, [chain_poset(m) for m in q.sizes]))


def L_chain_substitution(base: Poset, sizes: Sequence[int]) -> GroupRingElement:
    """L of the base with each element replaced by a chain, by exhaustive counting."""
    q = ChainSizesQuery(base, sizes)
    below = chain_sum_masks(q.base, q.sizes)
    return GroupRingElement(*ideal_sign_counts(below, len(below)))


def factor_L(spec: LexSumSpec) -> GroupRingElement:
    """L of a lexicographic sum via the parts' L times the chain-substituted sum."""
    acc = ONE
    for part in spec.parts:
        acc = acc * group_ring_L(part)
    return acc * L_chain_substitution(spec.base, [len(part) for part in spec.parts])


def antichain_L_plus(sizes: Sequence[int]) -> int:
    return factorial(sum(sizes)) // prod(factorial(m) for m in sizes)


def antichain_L_minus(sizes: Sequence[int]) -> int:
    if sum(m % 2 for m in sizes) > 1:
        return 0
    return antichain_L_plus([m // 2 for m in sizes])


def floor_theorem_L_minus(base: Poset, sizes: Sequence[int]) -> int | None:
    """Sign-imbalance of a chain substitution read off from the odd-size set.

    With ``odd`` the base elements carrying odd sizes: if ``odd`` is a chain
    the answer is ``sign * L+(base; floor(m/2), ...)``, where ``sign`` is the
    sign of the permutation taking ``odd`` from base element order into chain
    order. If ``odd`` holds an incomparable pair with equal strict up-sets or
    equal strict down-sets the answer is 0. Otherwise returns ``None``.
    """
    q = ChainSizesQuery(base, sizes)
    odd = [i for i, m in enumerate(q.sizes) if m % 2]
    below, above = base.below_masks, base.above_masks
    labels = [base.elements[i] for i in odd]
    if base.is_chain(labels):
        sign = permutation_sign(labels, base.sort_chain(labels))
        return sign * L_chain_substitution(base, [m // 2 for m in q.sizes]).plus
    for k, i in enumerate(odd):
        for j in odd[k + 1:]:
            if below[i] >> j & 1 or below[j] >> i & 1:
                continue
            if above[i] == above[j] or below[i] == below[j]:
                return 0
    return None


# ---------------------------------------------------------------------------
# Pascal-type arrays for the two-element antichain
# ---------------------------------------------------------------------------

def pascal_arrays(max_row: int) -> tuple[list[list[int]], list[list[int]]]:
    """Rows ``0..max_row`` of L+ and L- for two chains over a 2-antichain.

    Entry ``k`` of row ``n`` is the value at sizes ``(n - k, k)``. The L- rows
    come from the signed recurrence alone, never from the closed form.
    """
    plus = [[comb(n, k) for k in range(n + 1)] for n in range(max_row + 1)]
    minus = [[1]]
    for n in range(1, max_row + 1):
        prev = minus[-1]
        row = []
        for k in range(n + 1):
            left = prev[k - 1] if k >= 1 else 0
            right = prev[k] if k < n else 0
            row.append(left - right if k % 2 else left + right)
        minus.append(row)
    return plus, minus


# ---------------------------------------------------------------------------
# series-parallel expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise PosetError("leaf size must be nonnegative")


@dataclass(frozen=True)
class ChainSum:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise PosetError("chain node needs at least one child")


@dataclass(frozen=True)
class AntichainSum:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise PosetError("antichain node needs at least one child")


SPExpression = Union[Leaf, ChainSum, AntichainSum]


def sp_size(expr: SPExpression) -> int:
    if isinstance(expr, Leaf):
        return expr.size
    return sum(sp_size(c) for c in expr.children)


def _sp_eval(expr):
    if isinstance(expr, Leaf):
        return ONE, expr.size
    results = [_sp_eval(c) for c in expr.children]
    acc = ONE
    for L, _ in results:
        acc = acc * L
    sizes = [s for _, s in results]
    if isinstance(expr, AntichainSum):
        acc = acc * GroupRingElement.from_pm(antichain_L_plus(sizes), antichain_L_minus(sizes))
    return acc, sum(sizes)


def sp_evaluate(expr: SPExpression) -> GroupRingElement:
    return _sp_eval(expr)[0]


def sp_to_poset(expr: SPExpression) -> Poset:
    if isinstance(expr, Leaf):
        return chain_poset(expr.size)
    parts = [sp_to_poset(c) for c in expr.children]
    k = len(parts)
    base = chain_poset(k) if isinstance(expr, ChainSum) else antichain_poset(k)
    return lex_sum(LexSumSpec(base, parts))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_]+)|(\d+))")


def parse_sp(text: str) -> SPExpression:
    """Parse ``(chain (antichain 2 2) 3)``-style text; bare integers are chain leaves."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m.group(1) or m.group(2) or m.group(3) or int(m.group(4)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expr(i):
        if i >= len(tokens):
            raise ParseError("unexpected end of expression")
        tok = tokens[i]
        if isinstance(tok, int):
            return Leaf(tok), i + 1
        if tok != "(":
            raise ParseError(f"unexpected token {tok!r}")
        if i + 1 >= len(tokens) or tokens[i + 1] not in ("chain", "antichain"):
            raise ParseError("expected 'chain' or 'antichain' after '('")
        kind = tokens[i + 1]
        i += 2
        children = []
        while i < len(tokens) and tokens[i] != ")":
            child, i = expr(i)
            children.append(child)
        if i >= len(tokens):
            raise ParseError("missing ')'")
        if not children:
            raise ParseError(f"empty {kind} node")
        node = ChainSum(children) if kind == "chain" else AntichainSum(children)
        return node, i + 1

    if not tokens:
        raise ParseError("empty expression")
    node, end = expr(0)
    if end != len(tokens):
        raise ParseError("trailing tokens after expression")
    return node


def format_sp(expr: SPExpression) -> str:
    if isinstance(expr, Leaf):
        return str(expr.size)
    kind = "chain" if isinstance(expr, ChainSum) else "antichain"
    return f"({kind} {' '.join(format_sp(c) for c in expr.children)})"


def is_series_parallel(p: Poset) -> bool:
    """True iff no four elements induce the N-shaped poset a<b>c<d."""
    below, above = p.below_masks, p.above_masks
    n = len(p)
    for b in range(n):
        for c in range(n):
            if not below[b] >> c & 1:
                continue
            for d in range(n):
                if not above[c] >> d & 1 or d == b:
                    continue
                if below[d] >> b & 1 or above[d] >> b & 1:
                    continue
                for a in range(n):
                    if not below[b] >> a & 1 or a == c:
                        continue
                    cmp_c = below[c] >> a & 1 or above[c] >> a & 1
                    cmp_d = below[d] >> a & 1 or above[d] >> a & 1
                    if not cmp_c and not cmp_d:
                        return False
    return True


def diagonal_growth_certificate(base: Poset, sizes: Sequence[int], pair: tuple[str, str],
                                doublings: int = 4) -> dict:
    """Evidence that L+ is not polynomial in the sizes of an incomparable pair.

    Sets both sizes of ``pair`` to ``m = 1, 2, 4, ...`` (other sizes fixed) and
    checks ``L+ >= C(2m, m)`` at every sample together with strictly growing
    doubling ratios ``L+(2m) / L+(m)``; a polynomial's ratios converge to a
    constant while these must exceed the binomial's, which grow without bound.
    """
    i, j = base.index(pair[0]), base.index(pair[1])
    if base.comparable(pair[0], pair[1]):
        raise PosetError("growth test needs an incomparable pair")
    ms = [1 << k for k in range(doublings + 1)]
    values = []
    for m in ms:
        sz = list(sizes)
        sz[i] = sz[j] = m
        values.append(L_chain_substitution(base, sz).plus)
    lower = all(v >= comb(2 * m, m) for v, m in zip(values, ms))
    ratios = [values[k + 1] / values[k] for k in range(len(values) - 1)]
    growing = all(b > a for a, b in zip(ratios, ratios[1:]))
    return {"m": ms, "values": values, "ratios": ratios,
            "binomial_lower_bound": lower, "ratios_increasing": growing,
            "passed": lower and growing}
