"""Finite posets and their order complexes.

Elements are opaque string identifiers.  The strict order is always stored
transitively closed, and the element tuple is a fixed linear extension of it;
every simplex produced by :func:`order_complex` lists its vertices in that
order, which is what pins down boundary signs downstream.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import CycleError, InputError, UnknownElement
from .scomplex import SimplicialComplex


@dataclass(frozen=True, eq=False)
class FinitePoset:
    elements: tuple[str, ...]
    strict_lt: frozenset[tuple[str, str]]
    # element -> set of strictly larger elements
    _above: dict[str, frozenset[str]] = field(repr=False)

    @cached_property
    def rank(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._above

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self.strict_lt == other.strict_lt

    def __hash__(self):
        return hash((self.elements, self.strict_lt))

    def lt(self, a: str, b: str) -> bool:
        return b in self._above[a]

    def le(self, a: str, b: str) -> bool:
        return a == b or b in self._above[a]

    def above(self, a: str) -> frozenset[str]:
        """Elements strictly greater than ``a``."""
        return self._above[a]

    @cached_property
    def _below(self) -> dict[str, frozenset[str]]:
        below: dict[str, set[str]] = {x: set() for x in self.elements}
        for a, b in self.strict_lt:
            below[b].add(a)
        return {x: frozenset(s) for x, s in below.items()}

    def below(self, a: str) -> frozenset[str]:
        return self._below[a]

    def covers(self) -> list[tuple[str, str]]:
        """Covering pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
        out = []
        for a in self.elements:
            up = self._above[a]
            for b in sorted(up, key=self.rank.__getitem__):
                if not any(b in self._above[c] for c in up):
                    out.append((a, b))
        return out

    def is_antichain(self, subset: Iterable[str]) -> bool:
        s = list(subset)
        return not any(self.lt(a, b) for a in s for b in s)

    def minimal_elements(self) -> list[str]:
        return [x for x in self.elements if not self._below[x]]

    def longest_chain(self) -> int:
        """Number of elements in a longest chain (0 for the empty poset)."""
        best: dict[str, int] = {}
        for x in reversed(self.elements):
            best[x] = 1 + max((best[y] for y in self._above[x]), default=0)
        return max(best.values(), default=0)

    def restrict(self, carrier: Iterable[str]) -> "FinitePoset":
        keep = set(carrier)
        self._check_known(keep)
        elements = tuple(x for x in self.elements if x in keep)
        above = {x: self._above[x] & keep for x in elements}
        lt = frozenset((a, b) for a in elements for b in above[a])
        return FinitePoset(elements, lt, above)

    def _check_known(self, items: Iterable[str]):
        for x in items:
            if x not in self._above:
                raise UnknownElement(f"unknown poset element {x!r}")


def build_poset(elements: Iterable[str], relations: Iterable[tuple[str, str]]) -> FinitePoset:
    """Transitive closure of ``relations`` on ``elements``.

    The stored element order is a linear extension; among elements that are
    free to go next, the one listed first in the input wins.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        dupes = sorted({x for x in elements if elements.count(x) > 1})
        raise InputError(f"duplicate element identifiers: {dupes}")
    index = {x: i for i, x in enumerate(elements)}
    succ: list[set[int]] = [set() for _ in elements]
    for a, b in relations:
        for x in (a, b):
            if x not in index:
                raise UnknownElement(f"relation ({a!r}, {b!r}) references unknown element {x!r}")
        if a == b:
            raise CycleError(f"relation {a!r} < {a!r} is reflexive")
        succ[index[a]].add(index[b])

    # Kahn's algorithm, smallest input index first
    indeg = [0] * len(elements)
    for s in succ:
        for j in s:
            indeg[j] += 1
    ready = [i for i, d in enumerate(indeg) if d == 0]
    heapq.heapify(ready)
    topo: list[int] = []
    while ready:
        i = heapq.heappop(ready)
        topo.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(topo) != len(elements):
        stuck = [elements[i] for i in range(len(elements)) if indeg[i] > 0]
        raise CycleError(f"relations contain a cycle through {stuck}")

    # closure in reverse topological order
    reach: list[set[int]] = [set() for _ in elements]
    for i in reversed(topo):
        r = reach[i]
        for j in succ[i]:
            r.add(j)
            r |= reach[j]
    ordered = tuple(elements[i] for i in topo)
    above = {elements[i]: frozenset(elements[j] for j in reach[i]) for i in topo}
    lt = frozenset((a, b) for a in ordered for b in above[a])
    return FinitePoset(ordered, lt, above)


def upper_set(P: FinitePoset, omega: Iterable[str], strict: bool = False) -> frozenset[str]:
    omega = list(omega)
    P._check_known(omega)
    out: set[str] = set()
    for u in omega:
        out |= P.above(u)
    if not strict:
        out.update(omega)
    return frozenset(out)


def chains(P: FinitePoset, carrier: Iterable[str] | None = None) -> list[tuple[str, ...]]:
    """All nonempty chains inside ``carrier``, each listed bottom-up."""
    if carrier is None:
        members = P.elements
    else:
        keep = set(carrier)
        P._check_known(keep)
        members = tuple(x for x in P.elements if x in keep)
    rank = P.rank
    member_set = set(members)
    up = {x: sorted(P.above(x) & member_set, key=rank.__getitem__) for x in members}
    out: list[tuple[str, ...]] = []
    stack = [(x,) for x in reversed(members)]
    while stack:
        c = stack.pop()
        out.append(c)
        for y in reversed(up[c[-1]]):
            stack.append(c + (y,))
    return out


def order_complex(P: FinitePoset, carrier: Iterable[str] | None = None) -> SimplicialComplex:
    if carrier is None:
        vertices = P.elements
    else:
        keep = set(carrier)
        P._check_known(keep)
        vertices = tuple(x for x in P.elements if x in keep)
    return SimplicialComplex.from_sorted_faces(vertices, chains(P, vertices))
