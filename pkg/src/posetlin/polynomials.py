"""Exact polynomial fitting over the rationals.

Coefficients are :class:`fractions.Fraction`; nothing here touches floats.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from itertools import product
from math import factorial, lcm
from typing import Callable, Iterable, Sequence

from .errors import DuplicateAbscissa, NonPolynomial

Rational = Fraction


class UniPoly:
    """Univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def denominator_lcm(self) -> int:
        return reduce(lcm, (c.denominator for c in self.coeffs), 1)

    def integer_form(self) -> tuple[list[int], int]:
        """``(f, r)`` with ``self == f / r``, ``f`` integral and ``r`` minimal."""
        r = self.denominator_lcm()
        return [int(c * r) for c in self.coeffs], r

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "n") -> str:
        """Render as ``(integer polynomial)/denominator``, highest degree first."""
        if self.is_zero():
            return "0"
        f, r = self.integer_form()
        parts = []
        for k in range(len(f) - 1, -1, -1):
            c = f[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        text = " ".join(parts)
        if r == 1:
            return text
        return f"({text})/{r}"


def _newton_to_monomial(xs, divided):
    """Expand a Newton-form interpolant into ascending monomial coefficients."""
    result = UniPoly()
    basis = UniPoly([1])
    for k, d in enumerate(divided):
        result = result + basis * d
        basis = basis * UniPoly([-xs[k], 1])
    return result


def _check_samples(samples):
    pts = [(int(x), Fraction(y)) for x, y in samples]
    seen = set()
    for x, _ in pts:
        if x in seen:
            raise DuplicateAbscissa(f"abscissa {x} appears twice")
        seen.add(x)
    return pts


def interpolate(samples: Sequence[tuple[int, object]], degree_bound: int) -> UniPoly:
    """Polynomial of degree <= ``degree_bound`` through the samples.

    The first ``degree_bound + 1`` samples determine the polynomial (Newton
    divided differences); every later sample is checked against it.
    """
    pts = _check_samples(samples)
    if len(pts) < degree_bound + 1:
        raise ValueError(f"need {degree_bound + 1} samples, got {len(pts)}")
    head = pts[: degree_bound + 1]
    xs = [x for x, _ in head]
    table = [y for _, y in head]
    divided = [table[0]]
    for level in range(1, len(head)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        divided.append(table[0])
    poly = _newton_to_monomial(xs, divided)
    for x, y in pts[degree_bound + 1:]:
        if poly(x) != y:
            raise NonPolynomial(f"sample at {x} is {y}, polynomial gives {poly(x)}", witness=(x, y))
    return poly


def parity_split_fit(samples: Sequence[tuple[int, object]], degree_bound: int) -> tuple[UniPoly, UniPoly]:
    """Separate fits through the even-abscissa and odd-abscissa samples."""
    pts = _check_samples(samples)
    even = [(x, y) for x, y in pts if x % 2 == 0]
    odd = [(x, y) for x, y in pts if x % 2]
    return interpolate(even, degree_bound), interpolate(odd, degree_bound)


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def denominator_primes(poly: UniPoly) -> set[int]:
    return _prime_factors(poly.denominator_lcm())


def is_prime(n: int) -> bool:
    return n >= 2 and _prime_factors(n) == {n}


# ---------------------------------------------------------------------------
# several variables
# ---------------------------------------------------------------------------

class MultiPoly:
    """Polynomial in several variables: exponent tuple -> rational coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c != 0}

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __call__(self, point: Sequence[int]):
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, k in zip(point, exps):
                term *= Fraction(x) ** k
            total += term
        return total

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {dict(sorted(self.terms.items()))!r})"


def _binomial_basis(k: int) -> UniPoly:
    """C(x, k) as a polynomial in x."""
    poly = UniPoly([1])
    for j in range(k):
        poly = poly * UniPoly([-j, 1])
    return poly * Fraction(1, factorial(k))


def multi_fit(evaluator: Callable[[tuple[int, ...]], int], num_vars: int, degree_bound: int,
              verify_extra: int = 10, seed: int = 0) -> MultiPoly:
    """Fit a polynomial of total degree <= ``degree_bound`` to ``evaluator``.

    Samples the full grid ``{0..d}^k``, takes forward differences along each
    axis (one univariate Newton interpolation per axis) and converts from the
    binomial basis to monomials. The fit is then checked at the corner
    ``(d+2, ..., d+2)`` plus ``verify_extra - 1`` random points of
    ``{0..d+2}^k`` lying off the grid. Raises :class:`NonPolynomial` when the
    fitted total degree exceeds the bound or a check point disagrees.
    """
    d = degree_bound
    grid = {}
    for pt in product(range(d + 1), repeat=num_vars):
        grid[pt] = Fraction(evaluator(pt))
    # forward differences, one axis at a time
    for axis in range(num_vars):
        lines = {}
        for pt in grid:
            key = pt[:axis] + pt[axis + 1:]
            lines.setdefault(key, []).append(pt)
        for key, pts in lines.items():
            pts.sort(key=lambda p: p[axis])
            vals = [grid[p] for p in pts]
            diffs = []
            for _ in range(len(vals)):
                diffs.append(vals[0])
                vals = [b - a for a, b in zip(vals, vals[1:])]
            for p, v in zip(pts, diffs):
                grid[p] = v
    basis = [_binomial_basis(k) for k in range(d + 1)]
    terms: dict[tuple[int, ...], Fraction] = {}
    for alpha, c in grid.items():
        if c == 0:
            continue
        expansion = {(): c}
        for k in alpha:
            nxt = {}
            for exps, coef in expansion.items():
                for power, bc in enumerate(basis[k].coeffs):
                    if bc:
                        key = exps + (power,)
                        nxt[key] = nxt.get(key, 0) + coef * bc
            expansion = nxt
        for exps, coef in expansion.items():
            terms[exps] = terms.get(exps, 0) + coef
    poly = MultiPoly(num_vars, terms)
    if poly.total_degree > d:
        worst = max(poly.terms, key=sum)
        raise NonPolynomial(f"grid fit has total degree {poly.total_degree} > {d}", witness=worst)
    rng = random.Random(seed)
    checks = [(d + 2,) * num_vars]
    while num_vars and len(checks) < verify_extra:
        pt = tuple(rng.randint(0, d + 2) for _ in range(num_vars))
        if max(pt) > d:
            checks.append(pt)
    for pt in checks:
        val = evaluator(pt)
        if poly(pt) != val:
            raise NonPolynomial(f"value {val} at {pt} differs from fit {poly(pt)}", witness=pt)
    return poly


def binomial_poly(k: int) -> UniPoly:
    """C(n, k) as a polynomial in n."""
    return _binomial_basis(k)


__all__ = [
    "Rational", "UniPoly", "MultiPoly", "interpolate", "parity_split_fit",
    "denominator_primes", "multi_fit", "is_prime", "binomial_poly",
]
