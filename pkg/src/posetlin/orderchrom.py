"""Counting isotone maps that keep forbidden pairs apart, and the polynomial they form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DefectError, NonPolynomial, Overflow, PreconditionViolated
from .kernels import count_isotone_maps
from .polynomials import UniPoly, denominator_primes, interpolate, is_prime
from .poset import ConstraintSystem, connected_components

DEFAULT_BUDGET = 10**10


def _topological_order(p):
    below = p.below_masks
    # fewer strict predecessors first is always a linear extension
    return sorted(range(len(p)), key=lambda i: (below[i].bit_count(), i))


def _kernel_inputs(s: ConstraintSystem):
    p = s.poset
    order = _topological_order(p)
    pos = {e: k for k, e in enumerate(order)}
    pred = []
    for e in order:
        m = 0
        b = p.below_masks[e]
        for j in range(len(p)):
            if b >> j & 1:
                m |= 1 << pos[j]
        pred.append(m)
    forb = [0] * len(p)
    for pair in s.forbidden_equal:
        i, j = sorted(pos[p.index(x)] for x in pair)
        forb[j] |= 1 << i
    return pred, forb


def count_maps(s: ConstraintSystem, n: int, budget: int | None = DEFAULT_BUDGET) -> int:
    """Number of isotone maps ``|S| -> {1..n}`` sending every forbidden pair to distinct values."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = len(s)
    if budget is not None and n**m > budget:
        raise Overflow(f"{n}^{m} candidate maps exceed budget {budget}")
    pred, forb = _kernel_inputs(s)
    return count_isotone_maps(n, pred, forb)


@dataclass(frozen=True)
class OrderChromResult:
    polynomial: UniPoly
    component_count: int
    bound: int
    denominator_prime_set: frozenset[int]


def order_chromatic_polynomial(s: ConstraintSystem) -> OrderChromResult:
    """Interpolate ``count_maps`` at ``n = 0..m`` and confirm at ``m+1, m+2``.

    Raises :class:`DefectError` if the counts are not polynomial of degree
    ``<= m`` or if a denominator prime exceeds ``m - c + 1``.
    """
    m = len(s)
    samples = [(n, count_maps(s, n)) for n in range(m + 3)]
    try:
        poly = interpolate(samples, m)
    except NonPolynomial as exc:
        raise DefectError(f"counts are not polynomial: {exc}") from exc
    c = len(connected_components(s.poset))
    bound = m - c + 1
    primes = frozenset(denominator_primes(poly))
    bad = sorted(q for q in primes if q > bound)
    if bad:
        raise DefectError(f"denominator primes {bad} exceed bound {bound}")
    return OrderChromResult(poly, c, bound, primes)


def chromatic_number(s: ConstraintSystem) -> int:
    """Least number of colours properly colouring the graph of forbidden pairs; 0 for empty S."""
    m = len(s)
    if m == 0:
        return 0
    idx = s.poset.index
    adj = [0] * m
    for pair in s.forbidden_equal:
        i, j = (idx(x) for x in pair)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    # colour high-degree vertices first
    order = sorted(range(m), key=lambda v: -adj[v].bit_count())
    colour = [-1] * m

    def fits(k, t):
        if k == m:
            return True
        v = order[k]
        used = {colour[u] for u in range(m) if adj[v] >> u & 1 and colour[u] >= 0}
        top = max(colour) + 1
        for col in range(min(t, top + 1)):
            if col in used:
                continue
            colour[v] = col
            if fits(k + 1, t):
                return True
            colour[v] = -1
        return False

    for t in range(1, m + 1):
        colour = [-1] * m
        if fits(0, t):
            return t
    raise AssertionError("a graph on m vertices is m-colourable")


@dataclass(frozen=True)
class DivisibilityCheck:
    n: int
    residue: int
    applies: bool
    count: int | None
    divisible: bool | None


@dataclass
class DivisibilityReport:
    prime: int
    bound: int
    chromatic_number: int
    checks: list[DivisibilityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.divisible for c in self.checks if c.applies)

    def lines(self) -> list[str]:
        out = [f"p={self.prime} bound={self.bound} chi={self.chromatic_number}"]
        for c in self.checks:
            if not c.applies:
                out.append(f"n={c.n} (n mod p = {c.residue}) skipped")
            else:
                verdict = "ok" if c.divisible else "FAIL"
                out.append(f"n={c.n} (n mod p = {c.residue}) C={c.count} {verdict}")
        return out


def verify_divisibility(s: ConstraintSystem, p: int, n_values, budget: int | None = DEFAULT_BUDGET) -> DivisibilityReport:
    """Check ``p | C(S, n)`` for each ``n`` whose residue mod ``p`` is below the chromatic number."""
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    c = len(connected_components(s.poset))
    bound = len(s) - c + 1
    if p <= bound:
        raise PreconditionViolated(f"p={p} must exceed the bound {bound}")
    chi = chromatic_number(s)
    report = DivisibilityReport(p, bound, chi)
    for n in n_values:
        r = n % p
        if r < chi:
            cnt = count_maps(s, n, budget)
            report.checks.append(DivisibilityCheck(n, r, True, cnt, cnt % p == 0))
        else:
            report.checks.append(DivisibilityCheck(n, r, False, None, None))
    return report


def qualifying_primes(s: ConstraintSystem, how_many: int = 2) -> list[int]:
    """The smallest primes exceeding ``|S| - c + 1``."""
    bound = len(s) - len(connected_components(s.poset)) + 1
    out = []
    q = bound + 1
    while len(out) < how_many:
        if is_prime(q):
            out.append(q)
        q += 1
    return out
