"""Expanding ``(ar)^(p-1) a`` in a free ring and checking its coefficients mod p.

Words are built from ``r`` and the letters ``ad_r^m(a)``; the letters of the
second kind commute with one another, ``r`` does not commute with them, and
``r x = x r + ad_r(x)``. Every expansion is brought to the normal form
``ad^{m_1}(a) ... ad^{m_p}(a) r^k`` with ``m_1 >= ... >= m_p``.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial, prod

from .errors import PreconditionViolated
from .orderchrom import count_maps
from .polynomials import is_prime
from .poset import ConstraintSystem, Poset

R = -1  # the letter r inside a word; a nonnegative m stands for ad_r^m(a)


@dataclass(frozen=True, order=True)
class FreeMonomial:
    a_exponents: tuple[int, ...]
    r_power: int

    def __post_init__(self):
        exps = tuple(sorted((int(m) for m in self.a_exponents), reverse=True))
        if exps and exps[-1] < 0 or self.r_power < 0:
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "a_exponents", exps)

    @property
    def weight(self) -> int:
        return sum(self.a_exponents)

    def render(self) -> str:
        parts = [f"ad^{m}(a)" for m in self.a_exponents if m]
        zeros = self.a_exponents.count(0)
        if zeros:
            parts.append(f"a^{zeros}")
        if self.r_power:
            parts.append(f"r^{self.r_power}")
        return "·".join(parts) or "1"


@dataclass
class FreeExpression:
    terms: dict[FreeMonomial, int] = field(default_factory=dict)
    raw_terms: int | None = None

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __sub__(self, other: FreeExpression) -> FreeExpression:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return FreeExpression(out)

    def coefficient(self, mono: FreeMonomial) -> int:
        return self.terms.get(mono, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: (-kv[0].weight, kv[0]))

    def render(self) -> list[str]:
        return [f"{m.render()} : {c}" for m, c in self.sorted_items()]


def _check_p(p: int):
    if p < 2:
        raise ValueError("p must be at least 2")


def _rewrite_site(word):
    """Index of the rightmost ``r`` followed directly by an ``A`` letter, or -1."""
    for k in range(len(word) - 2, -1, -1):
        if word[k] == R and word[k + 1] != R:
            return k
    return -1


def expand_ar_power(p: int) -> FreeExpression:
    """Normal form of ``(ar)^(p-1) a``; ``raw_terms`` counts the uncollected terms (``p!``)."""
    _check_p(p)
    start = tuple([0, R] * (p - 1) + [0])
    pending = {start: 1}
    done: Counter = Counter()
    while pending:
        word, mult = pending.popitem()
        k = _rewrite_site(word)
        if k < 0:
            letters = [x for x in word if x != R]
            done[FreeMonomial(tuple(letters), len(word) - len(letters))] += mult
            continue
        x = word[k + 1]
        jumped = word[:k] + (x, R) + word[k + 2:]
        absorbed = word[:k] + (x + 1,) + word[k + 2:]
        pending[jumped] = pending.get(jumped, 0) + mult
        pending[absorbed] = pending.get(absorbed, 0) + mult
    return FreeExpression(dict(done), raw_terms=sum(done.values()))


def ad_ar_power(p: int) -> FreeExpression:
    """``ad_{ar}^(p-1)(a)``, using ``ad_{ar}(x) = a ad_r(x)`` and the Leibniz rule."""
    _check_p(p)
    current: Counter = Counter({(0,): 1})
    for _ in range(p - 1):
        nxt: Counter = Counter()
        for exps, c in current.items():
            for i in range(len(exps)):
                bumped = exps[:i] + (exps[i] + 1,) + exps[i + 1:]
                nxt[tuple(sorted(bumped + (0,), reverse=True))] += c
        current = nxt
    terms = {FreeMonomial(e, 0): c for e, c in current.items()}
    return FreeExpression(terms, raw_terms=sum(current.values()))


def hochschild_residual(p: int) -> FreeExpression:
    """``(ar)^(p-1) a - a^p r^(p-1) - ad_{ar}^(p-1)(a)``."""
    expansion = expand_ar_power(p)
    corner = FreeExpression({FreeMonomial((0,) * p, p - 1): 1})
    return expansion - corner - ad_ar_power(p)


@dataclass
class LemmaReport:
    prime: int
    is_prime: bool
    expansion_raw_terms: int
    ad_raw_terms: int
    entries: list[tuple[FreeMonomial, int, int, int]]  # monomial, coefficient, quotient, remainder

    @property
    def passed(self) -> bool:
        return all(rem == 0 for _, _, _, rem in self.entries)

    def lines(self) -> list[str]:
        head = f"p={self.prime}" + ("" if self.is_prime else " (not prime)")
        out = [f"{head} raw terms {self.expansion_raw_terms} / {self.ad_raw_terms}"]
        for mono, c, q, rem in self.entries:
            tail = f"= {self.prime}*{q}" if rem == 0 else f"remainder {rem}"
            out.append(f"{mono.render()} : {c} {tail}")
        out.append("PASS" if self.passed else "FAIL")
        return out


def verify_lemma_gph(p: int) -> LemmaReport:
    """Check that every coefficient of the residual is divisible by ``p``; failures are reported."""
    prime = is_prime(p)
    if not prime:
        warnings.warn(f"{p} is not prime; divisibility may fail", stacklevel=2)
    expansion = expand_ar_power(p)
    ad = ad_ar_power(p)
    corner = FreeExpression({FreeMonomial((0,) * p, p - 1): 1})
    residual = expansion - corner - ad
    entries = [(m, c, c // p, c % p) for m, c in residual.sorted_items()]
    return LemmaReport(p, prime, expansion.raw_terms, ad.raw_terms, entries)


def stratum_system(exponents) -> ConstraintSystem:
    """Chains of sizes ``m_i + 1``; every pair kept apart except a top with another chain's non-top."""
    ms = [m for m in exponents if m]
    labels = []
    relation = []
    tops = set()
    comp = {}
    for i, m in enumerate(ms, 1):
        chain = [f"P{i}_{k}" for k in range(m + 1)]
        labels.extend(chain)
        relation.extend(zip(chain, chain[1:]))
        tops.add(chain[-1])
        comp.update((x, i) for x in chain)
    forbidden = set()
    for x, y in combinations(labels, 2):
        if comp[x] != comp[y] and (x in tops) != (y in tops):
            continue
        forbidden.add(frozenset((x, y)))
    return ConstraintSystem(Poset(labels, relation), frozenset(forbidden))


@dataclass(frozen=True)
class CrossCheck:
    prime: int
    monomial: FreeMonomial
    count: int
    divisor: int
    predicted: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.count == self.predicted * self.divisor and self.predicted == self.actual

    @property
    def divisible(self) -> bool:
        return self.count % self.prime == 0


def coefficient_cross_check(p: int, exponents, expansion: FreeExpression | None = None) -> CrossCheck:
    """Compare an expansion coefficient with the map count of its constraint system."""
    ms = sorted((int(m) for m in exponents if m), reverse=True)
    total = sum(ms)
    if not 0 < total < p - 1:
        raise PreconditionViolated(f"need 0 < sum of exponents < {p - 1}, got {total}")
    if expansion is None:
        expansion = expand_ar_power(p)
    mono = FreeMonomial(tuple(ms) + (0,) * (p - len(ms)), p - 1 - total)
    count = count_maps(stratum_system(ms), p)
    divisor = prod(factorial(h) for h in Counter(ms).values())
    return CrossCheck(p, mono, count, divisor, count // divisor, expansion.coefficient(mono))


def _partitions(total, largest):
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def strata(p: int) -> list[tuple[int, ...]]:
    """Every nonzero exponent multiset with ``0 < sum < p - 1``."""
    return [part for total in range(1, p - 1) for part in _partitions(total, total)]


def cross_check_all(p: int) -> list[CrossCheck]:
    expansion = expand_ar_power(p)
    return [coefficient_cross_check(p, ms, expansion) for ms in strata(p)]
