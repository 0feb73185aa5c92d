"""Abstract simplicial complexes and subcomplex pairs.

A face is a tuple of vertices sorted by the complex's ``vertex_order``; the
i-th boundary face of a k-simplex (drop vertex i) carries sign ``(-1)**i``.
Every face is stored, not just the maximal ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable

from .errors import DuplicateVertex, NotAFace, NotASubcomplex, UnknownVertex

Vertex = Hashable
Face = tuple


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_order: tuple
    faces: frozenset

    @classmethod
    def from_sorted_faces(cls, vertex_order: Iterable, faces: Iterable[Face]) -> "SimplicialComplex":
        """Trusted constructor: faces already sorted and closed under subsets."""
        return cls(tuple(vertex_order), frozenset(faces))

    @cached_property
    def rank(self) -> dict:
        return {v: i for i, v in enumerate(self.vertex_order)}

    @cached_property
    def _by_dim(self) -> list[list[Face]]:
        rank = self.rank
        out: list[list[Face]] = []
        for f in self.faces:
            k = len(f) - 1
            while len(out) <= k:
                out.append([])
            out[k].append(f)
        for lst in out:
            lst.sort(key=lambda f: tuple(rank[v] for v in f))
        return out

    @property
    def dimension(self) -> int:
        return len(self._by_dim) - 1

    @property
    def vertices(self) -> tuple:
        return self.vertex_order

    def faces_of_dim(self, k: int) -> list[Face]:
        """Faces of dimension ``k`` in canonical (lexicographic by rank) order."""
        if 0 <= k < len(self._by_dim):
            return self._by_dim[k]
        return []

    def f_vector(self) -> list[int]:
        return [len(lst) for lst in self._by_dim]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def is_empty(self) -> bool:
        return not self.faces

    def maximal_faces(self) -> list[Face]:
        out = []
        for f in self.faces:
            if not any(len(g) > len(f) and set(f) <= set(g) for g in self.faces):
                out.append(f)
        return sorted(out, key=lambda f: tuple(self.rank[v] for v in f))

    def sort_face(self, vertices: Iterable) -> Face:
        rank = self.rank
        try:
            return tuple(sorted(vertices, key=rank.__getitem__))
        except KeyError as exc:
            raise UnknownVertex(f"unknown vertex {exc.args[0]!r}") from None

    def subcomplex(self, keep: Callable[[Face], bool]) -> "SimplicialComplex":
        """Faces satisfying ``keep``; the predicate must be closed under taking faces."""
        faces = frozenset(f for f in self.faces if keep(f))
        used = set()
        for f in faces:
            used.update(f)
        return SimplicialComplex(tuple(v for v in self.vertex_order if v in used), faces)

    def full_subcomplex(self, vertices: Iterable) -> "SimplicialComplex":
        keep = set(vertices)
        faces = frozenset(f for f in self.faces if keep.issuperset(f))
        return SimplicialComplex(tuple(v for v in self.vertex_order if v in keep), faces)


def from_maximal_faces(vertex_order: Iterable, maximal: Iterable[Iterable]) -> SimplicialComplex:
    vertex_order = tuple(vertex_order)
    if len(set(vertex_order)) != len(vertex_order):
        raise DuplicateVertex("vertex_order lists a vertex twice")
    rank = {v: i for i, v in enumerate(vertex_order)}
    faces: set[Face] = set()
    for top in maximal:
        top = tuple(top)
        for v in top:
            if v not in rank:
                raise UnknownVertex(f"face {top!r} uses unknown vertex {v!r}")
        top = tuple(sorted(set(top), key=rank.__getitem__))
        if top in faces:
            continue
        for k in range(1, len(top) + 1):
            faces.update(combinations(top, k))
    return SimplicialComplex(vertex_order, frozenset(faces))


def link(C: SimplicialComplex, sigma: Iterable) -> SimplicialComplex:
    sigma = set(sigma)
    if not sigma:
        return C
    s = C.sort_face(sigma) if all(v in C.rank for v in sigma) else None
    if s is None or s not in C.faces:
        raise NotAFace(f"{tuple(sigma)!r} is not a face of the complex")
    faces = set()
    for f in C.faces:
        if sigma.isdisjoint(f) and C.sort_face(sigma.union(f)) in C.faces:
            faces.add(f)
    used = set()
    for f in faces:
        used.update(f)
    return SimplicialComplex(tuple(v for v in C.vertex_order if v in used), frozenset(faces))


def cone(C: SimplicialComplex, apex) -> SimplicialComplex:
    if apex in C.rank:
        raise DuplicateVertex(f"apex {apex!r} is already a vertex")
    faces = set(C.faces)
    faces.add((apex,))
    faces.update((apex,) + f for f in C.faces)
    return SimplicialComplex((apex,) + C.vertex_order, frozenset(faces))


def face_label(face: Face) -> str:
    return "(" + ",".join(str(v) for v in face) + ")"


def barycentric_subdivision(C: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset of ``C`` (inclusion order).

    New vertices are the faces rendered by :func:`face_label`, listed by
    dimension and then canonically, which is a linear extension of inclusion.
    """
    ordered = [f for k in range(C.dimension + 1) for f in C.faces_of_dim(k)]
    label = {f: face_label(f) for f in ordered}
    cofaces: dict[Face, list[Face]] = {f: [] for f in ordered}
    for g in ordered:
        if len(g) > 1:
            for i in range(len(g)):
                cofaces[g[:i] + g[i + 1:]].append(g)
    # chains f0 < f1 < ... grown one codimension step at a time would miss
    # jumps, so close cofaces transitively first
    position = {f: i for i, f in enumerate(ordered)}
    up: dict[Face, list[Face]] = {}
    for f in reversed(ordered):
        acc = set(cofaces[f])
        for g in cofaces[f]:
            acc.update(up[g])
        up[f] = sorted(acc, key=position.__getitem__)
    faces = []
    stack = [(f,) for f in ordered]
    while stack:
        ch = stack.pop()
        faces.append(tuple(label[f] for f in ch))
        for g in up[ch[-1]]:
            stack.append(ch + (g,))
    return SimplicialComplex(tuple(label[f] for f in ordered), frozenset(faces))


@dataclass(frozen=True)
class ComplexPair:
    total: SimplicialComplex
    sub: SimplicialComplex


def make_pair(total: SimplicialComplex, sub: SimplicialComplex) -> ComplexPair:
    extra = set(sub.vertex_order) - set(total.vertex_order)
    if extra:
        raise NotASubcomplex(f"sub has vertices outside total: {sorted(map(str, extra))}")
    rank = total.rank
    faces = frozenset(tuple(sorted(f, key=rank.__getitem__)) for f in sub.faces)
    missing = faces - total.faces
    if missing:
        raise NotASubcomplex(f"{len(missing)} face(s) of sub are not faces of total, e.g. {next(iter(missing))!r}")
    keep = set(sub.vertex_order)
    sub = SimplicialComplex(tuple(v for v in total.vertex_order if v in keep), faces)
    return ComplexPair(total, sub)
