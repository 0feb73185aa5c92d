"""Finite permutation groups at desk scale.

A permutation is a tuple of images of ``0..d-1``.  Products compose left to
right: ``mul(p, q)`` applies ``p`` first, so ``mul(p, q)[i] == q[p[i]]``.
Group elements are enumerated by closure and sorted lexicographically by
image tuple; that sort is the default total order on the group.  Any other
total order can be supplied as a ``key`` function.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import DegreeMismatch, InvalidPermutation, NotASubgroup, SizeCapExceeded

Permutation = tuple
OrderKey = Callable[[Permutation], object]

DEFAULT_SIZE_CAP = 20000


def default_size_cap() -> int:
    raw = os.environ.get("BREDON_SIZE_CAP")
    return int(raw) if raw else DEFAULT_SIZE_CAP


def perm(images: Iterable[int]) -> Permutation:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise InvalidPermutation(f"{list(p)} is not a permutation of 0..{len(p) - 1}")
    return p


def identity(d: int) -> Permutation:
    return tuple(range(d))


def mul(p: Permutation, q: Permutation) -> Permutation:
    return tuple(q[i] for i in p)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def from_cycles(d: int, *cycles: Sequence[int]) -> Permutation:
    img = list(range(d))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return perm(img)


def conjugate_element(a: Permutation, g: Permutation) -> Permutation:
    """g^-1 a g."""
    return mul(mul(inverse(g), a), g)


@dataclass(eq=False)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    _elements: tuple[Permutation, ...] | None = field(default=None, repr=False)
    _element_set: frozenset | None = field(default=None, repr=False)

    def __post_init__(self):
        gens = tuple(perm(g) for g in self.generators)
        for g in gens:
            if len(g) != self.degree:
                raise DegreeMismatch(f"generator {list(g)} has degree {len(g)}, group degree is {self.degree}")
        self.generators = gens

    def elements(self, cap: int | None = None) -> tuple[Permutation, ...]:
        if self._elements is None:
            cap = default_size_cap() if cap is None else cap
            e = identity(self.degree)
            seen = {e}
            frontier = [e]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = mul(x, g)
                        if y not in seen:
                            seen.add(y)
                            if len(seen) > cap:
                                raise SizeCapExceeded(f"group has more than {cap} elements")
                            nxt.append(y)
                frontier = nxt
            self._elements = tuple(sorted(seen))
            self._element_set = frozenset(seen)
        return self._elements

    @property
    def element_set(self) -> frozenset:
        if self._element_set is None:
            self.elements()
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, g) -> bool:
        return tuple(g) in self.element_set

    def __len__(self):
        return self.order

    def __repr__(self):
        gens = ", ".join(str(list(g)) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"


def group(degree: int, generators: Iterable[Iterable[int]]) -> PermGroup:
    return PermGroup(degree, tuple(tuple(g) for g in generators))


def enumerate_group(G: PermGroup, cap: int | None = None) -> tuple[Permutation, ...]:
    """All elements, sorted lexicographically by image tuple."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1")
    if G._elements is not None and cap is not None and len(G._elements) > cap:
        raise SizeCapExceeded(f"group has {len(G._elements)} > {cap} elements")
    return G.elements(cap)


def _same_degree(A: PermGroup, B: PermGroup):
    if A.degree != B.degree:
        raise DegreeMismatch(f"degrees differ: {A.degree} vs {B.degree}")


def subgroup_le(A: PermGroup, B: PermGroup) -> bool:
    _same_degree(A, B)
    return A.element_set <= B.element_set


def subgroup_equal(A: PermGroup, B: PermGroup) -> bool:
    _same_degree(A, B)
    return A.element_set == B.element_set


def conjugate(A: PermGroup, g: Permutation) -> PermGroup:
    """g^-1 A g, generated by the conjugated generators."""
    if len(g) != A.degree:
        raise DegreeMismatch(f"element degree {len(g)} != group degree {A.degree}")
    return PermGroup(A.degree, tuple(conjugate_element(a, g) for a in A.generators))


def conjugate_set(S: Iterable[Permutation], g: Permutation) -> frozenset:
    gi = inverse(g)
    return frozenset(mul(mul(gi, a), g) for a in S)


def coset(H: PermGroup, g: Permutation, side: str = "left") -> frozenset:
    """gH for side='left', Hg for side='right'."""
    if side == "left":
        return frozenset(mul(g, h) for h in H.elements())
    if side == "right":
        return frozenset(mul(h, g) for h in H.elements())
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def left_cosets(G: PermGroup, H: PermGroup, side: str = "left", key: OrderKey | None = None) -> list[Permutation]:
    """One representative per coset of H in G: the least element of each
    coset under ``key``; representatives listed in increasing order."""
    if not subgroup_le(H, G):
        raise NotASubgroup("H is not a subgroup of G")
    key = key or (lambda g: g)
    seen: set = set()
    reps = []
    for g in sorted(G.elements(), key=key):
        if g in seen:
            continue
        c = coset(H, g, side)
        seen |= c
        reps.append(min(c, key=key))
    return reps


def largest_in_coset(H: PermGroup, g: Permutation, side: str = "right", key: OrderKey | None = None) -> Permutation:
    return max(coset(H, g, side), key=key or (lambda x: x))


def random_order(G: PermGroup, rng: random.Random) -> OrderKey:
    """A uniformly random total order on G, as a sort key."""
    els = list(G.elements())
    rng.shuffle(els)
    rank = {g: i for i, g in enumerate(els)}
    return rank.__getitem__


# --- small catalogue ----------------------------------------------------------

def symmetric(n: int, degree: int | None = None, offset: int = 0) -> PermGroup:
    d = degree or n + offset
    if n < 2:
        return PermGroup(d, ())
    pts = list(range(offset, offset + n))
    return PermGroup(d, (from_cycles(d, pts[:2]), from_cycles(d, pts)))


def alternating(n: int, degree: int | None = None, offset: int = 0) -> PermGroup:
    d = degree or n + offset
    pts = list(range(offset, offset + n))
    gens = tuple(from_cycles(d, [pts[0], pts[1], pts[i]]) for i in range(2, n))
    return PermGroup(d, gens)


def cyclic(n: int, degree: int | None = None, offset: int = 0) -> PermGroup:
    d = degree or n + offset
    if n < 2:
        return PermGroup(d, ())
    return PermGroup(d, (from_cycles(d, list(range(offset, offset + n))),))


def dihedral(n: int, degree: int | None = None, offset: int = 0) -> PermGroup:
    """Symmetries of an n-gon on points offset..offset+n-1 (order 2n)."""
    d = degree or n + offset
    pts = list(range(offset, offset + n))
    rot = from_cycles(d, pts)
    refl = from_cycles(d, *[[pts[i], pts[n - 1 - i]] for i in range(n // 2)])
    return PermGroup(d, (rot, refl))


def direct_product(*factors: PermGroup) -> PermGroup:
    """Factors acting on consecutive disjoint blocks of points."""
    d = sum(F.degree for F in factors)
    gens = []
    offset = 0
    for F in factors:
        for g in F.generators:
            img = list(range(d))
            for i, x in enumerate(g):
                img[offset + i] = offset + x
            gens.append(tuple(img))
        offset += F.degree
    return PermGroup(d, tuple(gens))


def generated(degree: int, gens: Iterable[Permutation]) -> PermGroup:
    return PermGroup(degree, tuple(gens))


def subgroups_two_generated(G: PermGroup) -> list[PermGroup]:
    """Distinct subgroups generated by at most two elements, by increasing order."""
    els = G.elements()
    found: dict[frozenset, PermGroup] = {}
    e = identity(G.degree)
    found[frozenset([e])] = PermGroup(G.degree, ())
    cyclic_of: dict[Permutation, frozenset] = {}
    for g in els:
        H = PermGroup(G.degree, (g,))
        cyclic_of[g] = H.element_set
        found.setdefault(H.element_set, H)
    for a, b in combinations(els, 2):
        if b in cyclic_of[a] or a in cyclic_of[b]:
            continue
        H = PermGroup(G.degree, (a, b))
        found.setdefault(H.element_set, H)
    return sorted(found.values(), key=lambda H: (H.order, sorted(H.element_set)))
