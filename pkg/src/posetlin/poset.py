"""Finite posets stored by their cover relation.

A :class:`Poset` keeps its elements in a fixed order. That order is the
reference order used for every sign computation elsewhere in the package.
Order queries run on bitmasks computed once at construction, so instances
are immutable and safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import CycleError, PosetError, UnknownElement


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite partial order on string labels.

    ``relation`` may be any set of pairs ``(lower, upper)``; it is closed
    transitively and only the cover pairs are kept.
    """

    __slots__ = ("elements", "covers", "_index", "_below", "_above")

    def __init__(self, elements: Iterable[str], relation: Iterable[tuple[str, str]] = ()):
        elements = tuple(elements)
        index = {}
        for i, x in enumerate(elements):
            if not isinstance(x, str):
                raise PosetError(f"element labels must be strings, got {x!r}")
            if x in index:
                raise PosetError(f"duplicate element {x!r}")
            index[x] = i
        n = len(elements)
        preds = [0] * n
        for pair in relation:
            a, b = pair
            if a not in index:
                raise UnknownElement(a)
            if b not in index:
                raise UnknownElement(b)
            if a == b:
                raise CycleError(f"self-loop on {a!r}")
            preds[index[b]] |= 1 << index[a]
        below = _close(preds, elements)
        self._init(elements, index, below)

    def _init(self, elements, index, below):
        n = len(elements)
        above = [0] * n
        for i, m in enumerate(below):
            for j in _bits(m):
                above[j] |= 1 << i
        self.elements = elements
        self._index = index
        self._below = tuple(below)
        self._above = tuple(above)
        self.covers = frozenset(
            (elements[a], elements[b])
            for b in range(n)
            for a in _bits(below[b])
            if not above[a] & below[b]
        )

    @classmethod
    def from_masks(cls, elements: Sequence[str], below: Sequence[int]) -> Poset:
        """Build from already transitively closed strict-down-set masks."""
        self = cls.__new__(cls)
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise PosetError("duplicate element labels")
        self._init(elements, index, list(below))
        return self

    # -- basic queries -----------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        covers = sorted(self.covers, key=lambda c: (self._index[c[0]], self._index[c[1]]))
        return f"Poset({list(self.elements)!r}, {covers!r})"

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(x) from None

    @property
    def below_masks(self) -> tuple[int, ...]:
        return self._below

    @property
    def above_masks(self) -> tuple[int, ...]:
        return self._above

    def less(self, x: str, y: str) -> bool:
        return bool(self._below[self.index(y)] >> self.index(x) & 1)

    def leq(self, x: str, y: str) -> bool:
        return x == y and x in self._index or self.less(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def strict_down(self, x: str) -> frozenset[str]:
        return self._labels(self._below[self.index(x)])

    def strict_up(self, x: str) -> frozenset[str]:
        return self._labels(self._above[self.index(x)])

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def _labels(self, mask: int) -> frozenset[str]:
        return frozenset(self.elements[i] for i in _bits(mask))

    def relations(self) -> frozenset[tuple[str, str]]:
        """All strict pairs ``(x, y)`` with ``x < y``."""
        el = self.elements
        return frozenset((el[a], el[b]) for b in range(len(el)) for a in _bits(self._below[b]))

    def minimal(self) -> list[str]:
        return [x for i, x in enumerate(self.elements) if not self._below[i]]

    def maximal(self) -> list[str]:
        return [x for i, x in enumerate(self.elements) if not self._above[i]]

    def is_chain(self, labels: Iterable[str]) -> bool:
        idx = [self.index(x) for x in labels]
        return all(
            self._below[i] >> j & 1 or self._below[j] >> i & 1
            for k, i in enumerate(idx) for j in idx[k + 1:]
        )

    def sort_chain(self, labels: Iterable[str]) -> list[str]:
        """Order the members of a chain from bottom to top."""
        return sorted(labels, key=lambda x: self._below[self.index(x)].bit_count())

    # -- derived posets ----------------------------------------------------

    def induced(self, labels: Iterable[str]) -> Poset:
        keep = set(labels)
        for x in keep:
            self.index(x)
        sub = [x for x in self.elements if x in keep]
        return Poset(sub, ((a, b) for a, b in self.relations() if a in keep and b in keep))

    def reordered(self, order: Sequence[str]) -> Poset:
        """Same order relation, different reference order."""
        if sorted(order) != sorted(self.elements):
            raise PosetError("reordering must be a permutation of the elements")
        return Poset(order, self.covers)

    def relabeled(self, mapping) -> Poset:
        return Poset((mapping[x] for x in self.elements),
                     ((mapping[a], mapping[b]) for a, b in self.covers))

    # -- serialisation -----------------------------------------------------

    def to_dict(self) -> dict:
        covers = sorted(self.covers, key=lambda c: (self._index[c[0]], self._index[c[1]]))
        return {"elements": list(self.elements), "covers": [list(c) for c in covers]}

    @classmethod
    def from_dict(cls, doc) -> Poset:
        try:
            elements = doc["elements"]
            covers = doc.get("covers", [])
        except (KeyError, TypeError, AttributeError):
            raise PosetError("poset document needs an 'elements' array") from None
        pairs = []
        for c in covers:
            if not isinstance(c, (list, tuple)) or len(c) != 2:
                raise PosetError(f"malformed cover pair {c!r}")
            pairs.append((c[0], c[1]))
        return poset_from_covers(elements, pairs)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> Poset:
        return cls.from_dict(json.loads(text))


def _close(preds, elements):
    """Transitive closure of direct-predecessor masks; raises on cycles."""
    n = len(preds)
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for b in range(n):
        for a in _bits(preds[b]):
            succ[a].append(b)
            indeg[b] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    below = list(preds)
    done = 0
    while ready:
        a = ready.pop()
        done += 1
        for b in succ[a]:
            below[b] |= below[a]
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    if done != n:
        stuck = [elements[i] for i in range(n) if indeg[i]]
        raise CycleError(f"relation has a directed cycle through {stuck}")
    return below


def poset_from_covers(elements: Iterable[str], covers: Iterable[tuple[str, str]]) -> Poset:
    return Poset(elements, covers)


def leq(p: Poset, x: str, y: str) -> bool:
    return p.leq(x, y)


def chain_poset(n: int, prefix: str = "c") -> Poset:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Poset(labels, zip(labels, labels[1:]))


def antichain_poset(n: int, prefix: str = "a") -> Poset:
    return Poset(f"{prefix}{i}" for i in range(1, n + 1))


def _hasse_adjacency(p: Poset):
    n = len(p)
    adj = [0] * n
    for a, b in p.covers:
        i, j = p.index(a), p.index(b)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _component_masks(p: Poset) -> list[int]:
    adj = _hasse_adjacency(p)
    seen = 0
    comps = []
    for start in range(len(p)):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= adj[i]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(p: Poset) -> list[Poset]:
    """Components of the undirected Hasse graph, as induced subposets."""
    return [p.induced(p._labels(c)) for c in _component_masks(p)]


def maximal_chains(p: Poset) -> list[list[str]]:
    """Every maximal chain, bottom to top.

    Maximal chains are exactly the Hasse paths from a minimal to a maximal
    element. The empty poset has one maximal chain, the empty one.
    """
    if not len(p):
        return [[]]
    n = len(p)
    up_covers = [[] for _ in range(n)]
    for a, b in p.covers:
        up_covers[p.index(a)].append(p.index(b))
    for lst in up_covers:
        lst.sort()
    out = []

    def walk(path):
        last = path[-1]
        if not up_covers[last]:
            out.append([p.elements[i] for i in path])
            return
        for j in up_covers[last]:
            path.append(j)
            walk(path)
            path.pop()

    for i in range(n):
        if not p.below_masks[i]:
            walk([i])
    return out


def bicolorings(p: Poset) -> list[dict[str, int]]:
    """All proper 2-colourings of the Hasse graph (empty list if none exist)."""
    adj = _hasse_adjacency(p)
    per_component = []
    for comp in _component_masks(p):
        root = (comp & -comp).bit_length() - 1
        color = {root: 0}
        stack = [root]
        while stack:
            i = stack.pop()
            for j in _bits(adj[i]):
                if j not in color:
                    color[j] = 1 - color[i]
                    stack.append(j)
                elif color[j] == color[i]:
                    return []
        per_component.append(color)
    out = []
    for flips in product((0, 1), repeat=len(per_component)):
        col = {}
        for flip, comp_colors in zip(flips, per_component):
            for i, c in comp_colors.items():
                col[p.elements[i]] = c ^ flip
        out.append({x: col[x] for x in p.elements})
    return out


def is_bicoloring(p: Poset, coloring) -> bool:
    if set(coloring) != set(p.elements) or any(c not in (0, 1) for c in coloring.values()):
        return False
    return all(coloring[a] != coloring[b] for a, b in p.covers)


@dataclass(frozen=True)
class ConstraintSystem:
    """A poset together with pairs of elements that may not receive equal values."""

    poset: Poset
    forbidden_equal: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = set()
        for pair in self.forbidden_equal:
            pair = tuple(pair)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise PosetError(f"forbidden pair must hold two distinct elements: {pair!r}")
            for x in pair:
                if x not in self.poset:
                    raise UnknownElement(x)
            pairs.add(frozenset(pair))
        object.__setattr__(self, "forbidden_equal", frozenset(pairs))

    def __len__(self):
        return len(self.poset)

    def to_dict(self) -> dict:
        doc = self.poset.to_dict()
        idx = self.poset.index
        doc["forbidden_equal"] = sorted(
            (sorted(pair, key=idx) for pair in self.forbidden_equal),
            key=lambda pr: (idx(pr[0]), idx(pr[1])),
        )
        return doc

    @classmethod
    def from_dict(cls, doc) -> ConstraintSystem:
        poset = Poset.from_dict(doc)
        raw = doc.get("forbidden_equal", [])
        if not isinstance(raw, list):
            raise PosetError("'forbidden_equal' must be an array of pairs")
        pairs = set()
        for pr in raw:
            if not isinstance(pr, (list, tuple)) or len(pr) != 2 or pr[0] == pr[1]:
                raise PosetError(f"malformed forbidden pair {pr!r}")
            pairs.add(frozenset(pr))
        return cls(poset, frozenset(pairs))
