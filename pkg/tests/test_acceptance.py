"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (runtime included) before
asserting, so ``pytest -s`` or the captured log shows the whole table.
"""

from __future__ import annotations

import random
import time
from itertools import combinations, product

from posetlin.generate import all_labelled_posets, poset_catalog, random_poset
from posetlin.hochschild import (
    ad_ar_power, cross_check_all, expand_ar_power, hochschild_residual, verify_lemma_gph,
)
from posetlin.lexsum import (
    LexSumSpec, L_chain_substitution, antichain_L_minus, antichain_L_plus,
    diagonal_growth_certificate, factor_L, floor_theorem_L_minus, lex_sum, pascal_arrays,
)
from posetlin.linearization import (
    enumerate_linearizations, group_ring_L, imbalance_via_bicoloring, stanley_balance_test,
)
from posetlin.orderchrom import (
    count_maps, order_chromatic_polynomial, qualifying_primes, verify_divisibility,
)
from posetlin.polynomials import NonPolynomial, multi_fit
from posetlin.poset import ConstraintSystem, antichain_poset, bicolorings, chain_poset
from posetlin.strengthen import (
    check_strengthening, condition_a, condition_b, criterion_c, strengthen_felsner,
    strengthen_iterative,
)

PASCAL_PLUS = [
    [1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1], [1, 5, 10, 10, 5, 1],
    [1, 6, 15, 20, 15, 6, 1], [1, 7, 21, 35, 35, 21, 7, 1], [1, 8, 28, 56, 70, 56, 28, 8, 1],
]
PASCAL_MINUS = [
    [1], [1, 1], [1, 0, 1], [1, 1, 1, 1], [1, 0, 2, 0, 1], [1, 1, 2, 2, 1, 1],
    [1, 0, 3, 0, 3, 0, 1], [1, 1, 3, 3, 3, 3, 1, 1], [1, 0, 4, 0, 6, 0, 4, 0, 1],
]


def report(capsys, number, title, ok, detail, elapsed, limit):
    in_time = elapsed < limit
    verdict = "PASS" if ok and in_time else "FAIL"
    with capsys.disabled():
        print(f"\n{verdict} criterion {number} ({title}): {detail}; {elapsed:.2f}s (limit {limit}s)")
    assert ok, detail
    assert in_time, f"took {elapsed:.2f}s, limit {limit}s"


def _chains(p):
    return [list(c) for k in range(len(p) + 1) for c in combinations(p.elements, k) if p.is_chain(c)]


def _signed_enumeration(p):
    even = odd = 0
    for lin in enumerate_linearizations(p, limit=None):
        if lin.sign > 0:
            even += 1
        else:
            odd += 1
    return even + odd, even - odd


def test_criterion_1_pascal(capsys):
    t = time.perf_counter()
    plus, minus = pascal_arrays(8)
    ok = plus == PASCAL_PLUS and minus == PASCAL_MINUS
    report(capsys, 1, "Pascal arrays", ok, f"{len(plus)} rows of each array compared exactly",
           time.perf_counter() - t, 1)


def test_criterion_2_factorization(capsys):
    t = time.perf_counter()
    rng = random.Random(2002)
    bad = []
    done = 0
    while done < 200:
        k = rng.randint(1, 3)
        sizes = [rng.randint(0, 7) for _ in range(k)]
        if sum(sizes) > 7:
            continue
        base = random_poset(k, rng.random(), rng)
        parts = [random_poset(m, rng.random(), rng) for m in sizes]
        spec = LexSumSpec(base, parts)
        if factor_L(spec) != group_ring_L(lex_sum(spec)):
            bad.append(spec)
        done += 1
    report(capsys, 2, "factorization", not bad, f"{done} random sums, {len(bad)} mismatches",
           time.perf_counter() - t, 30)


def test_criterion_3_antichain_closed_forms(capsys):
    t = time.perf_counter()
    bad = []
    cases = zeros = 0
    for m0 in range(1, 4):
        base = antichain_poset(m0)
        for sizes in product(range(5), repeat=m0):
            spec = LexSumSpec(base, [chain_poset(m) for m in sizes])
            plus, minus = _signed_enumeration(lex_sum(spec))
            cases += 1
            zeros += sum(m % 2 for m in sizes) > 1
            if (plus, minus) != (antichain_L_plus(sizes), antichain_L_minus(sizes)):
                bad.append(sizes)
    report(capsys, 3, "antichain closed forms", not bad,
           f"{cases} size vectors ({zeros} in the zero case), {len(bad)} mismatches",
           time.perf_counter() - t, 60)


def test_criterion_4_floor_theorem(capsys):
    t = time.perf_counter()
    applicable = 0
    bad = []
    for n in range(5):
        for base in all_labelled_posets(n):
            for sizes in product(range(4), repeat=n):
                value = floor_theorem_L_minus(base, sizes)
                if value is None:
                    continue
                applicable += 1
                truth = L_chain_substitution(base, sizes).minus
                if value != truth:
                    bad.append((base, sizes, value, truth))
    detail = f"{applicable} applicable instances, {len(bad)} disagree with counting"
    if bad:
        base, sizes, value, truth = bad[0]
        detail += f" (first: {base!r} sizes {sizes}: formula {value}, counted {truth})"
    report(capsys, 4, "floor theorem", not bad, detail, time.perf_counter() - t, 300)


def test_criterion_5_sign_balance(capsys):
    t = time.perf_counter()
    posets = balanced = colourings = 0
    bad = []
    for n in range(8):
        for p in poset_catalog(n):
            posets += 1
            minus = group_ring_L(p).minus
            if stanley_balance_test(p):
                balanced += 1
                if minus != 0:
                    bad.append(("balance", p))
            for col in bicolorings(p):
                colourings += 1
                if imbalance_via_bicoloring(p, col) != minus:
                    bad.append(("bicolor", p))
    report(capsys, 5, "sign balance", not bad,
           f"{posets} posets up to isomorphism, {balanced} pass the parity test, "
           f"{colourings} bicolorings, {len(bad)} failures", time.perf_counter() - t, 300)


def test_criterion_6_order_chromatic(capsys):
    t = time.perf_counter()
    rng = random.Random(6006)
    bad = []
    samples = 300
    for _ in range(samples):
        m = rng.randint(0, 5)
        p = random_poset(m, rng.random() * 0.6, rng)
        density = rng.random()
        pairs = frozenset(frozenset(pr) for pr in combinations(p.elements, 2) if rng.random() < density)
        s = ConstraintSystem(p, pairs)
        res = order_chromatic_polynomial(s)
        if any(res.polynomial(n) != count_maps(s, n) for n in range(m + 5)):
            bad.append(("values", s))
        if any(q > res.bound for q in res.denominator_prime_set):
            bad.append(("primes", s))
        for q in qualifying_primes(s, 2):
            if not verify_divisibility(s, q, range(2 * q + 1)).passed:
                bad.append(("divisibility", s, q))
    report(capsys, 6, "order-chromatic", not bad, f"{samples} random systems, {len(bad)} failures",
           time.perf_counter() - t, 300)


def test_criterion_7_strengthening(capsys):
    t = time.perf_counter()
    rng = random.Random(7007)
    bad = []
    pairs_checked = 0
    while pairs_checked < 600:
        p = random_poset(rng.randint(1, 7), rng.random() * 0.6, rng)
        s = rng.choice(_chains(p))
        for build in (strengthen_iterative, strengthen_felsner):
            if not all(check_strengthening(p, s, build(p, s).order).values()):
                bad.append((build.__name__, p, s))
        pairs_checked += 1
    triples = 0
    for n in range(7):
        for p in poset_catalog(n):
            for s in _chains(p):
                rest = [x for x in p.elements if x not in s]
                for x, y in product(rest, rest):
                    if x == y or p.comparable(x, y):
                        continue
                    triples += 1
                    c = criterion_c(p, s, x, y)
                    if not condition_a(p, s, x, y) == condition_b(p, s, x, y) == c:
                        bad.append(("equivalence", p, s, x, y))
                    if c and criterion_c(p, s, y, x):
                        bad.append(("both forbidden", p, s, x, y))
    report(capsys, 7, "strengthening", not bad,
           f"{pairs_checked} random (P, S) pairs with both methods, {triples} (P, S, x, y) "
           f"equivalence cases, {len(bad)} failures", time.perf_counter() - t, 300)


def test_criterion_8_hochschild(capsys):
    from math import factorial

    t = time.perf_counter()
    bad = []
    for p in (2, 3, 5, 7):
        if not verify_lemma_gph(p).passed:
            bad.append(("divisibility", p))
        if expand_ar_power(p).raw_terms != factorial(p) or ad_ar_power(p).raw_terms != factorial(p - 1):
            bad.append(("raw terms", p))
        if any(m.weight in (0, p - 1) for m in hochschild_residual(p).terms):
            bad.append(("strata", p))
    crosses = 0
    for p in (3, 5, 7):
        for c in cross_check_all(p):
            crosses += 1
            if not c.passed:
                bad.append(("cross-check", p, c.monomial))
    report(capsys, 8, "Hochschild", not bad,
           f"p in 2,3,5,7 checked, {crosses} strata cross-checked, {len(bad)} failures",
           time.perf_counter() - t, 60)


def _expected_degree(base, chain, sizes):
    sm = base.mask(chain)
    total = 0
    for i, x in enumerate(base.elements):
        related = (base.below_masks[i] | base.above_masks[i] | 1 << i) & sm
        if related != sm:
            total += sizes[i]
    return total


def test_criterion_9_polynomiality(capsys):
    t = time.perf_counter()
    rng = random.Random(9009)
    bad = []
    fits = 0
    multivariate = 0
    while fits < 24:
        base = random_poset(rng.randint(2, 4), rng.random() * 0.7, rng)
        chains = [c for c in _chains(base) if 1 <= len(c) <= 3]
        chain = rng.choice(chains)
        idx = [base.index(x) for x in chain]
        sizes = [rng.randint(0, 2) for _ in base]
        deg = _expected_degree(base, chain, sizes)
        if not 1 <= deg <= 5:
            continue

        def evaluate(point, sizes=sizes, idx=idx, base=base):
            sz = list(sizes)
            for i, v in zip(idx, point):
                sz[i] = v
            return L_chain_substitution(base, sz).plus

        try:
            fit = multi_fit(evaluate, len(idx), deg + 1, verify_extra=10, seed=fits)
            if fit.total_degree != deg:
                bad.append(("degree", base, chain, sizes, fit.total_degree, deg))
        except NonPolynomial as exc:
            bad.append(("fit", base, chain, sizes, str(exc)))
        fits += 1
        multivariate += len(idx) > 1
    growth = 0
    while growth < 12:
        base = random_poset(rng.randint(2, 4), rng.random() * 0.6, rng)
        pairs = [(x, y) for x, y in combinations(base.elements, 2) if not base.comparable(x, y)]
        if not pairs:
            continue
        pair = rng.choice(pairs)
        sizes = [rng.randint(0, 2) for _ in base]
        cert = diagonal_growth_certificate(base, sizes, pair, doublings=4)
        if not cert["passed"]:
            bad.append(("growth", base, pair, sizes, cert))
        growth += 1
    report(capsys, 9, "polynomiality", not bad,
           f"{fits} chain fits ({multivariate} in several variables), {growth} non-chain growth certificates, {len(bad)} failures",
           time.perf_counter() - t, 600)
