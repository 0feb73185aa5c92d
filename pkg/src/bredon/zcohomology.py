"""Integer cochain complexes and simplicial cohomology with torsion."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import ComplexNotExact, DegreeOutOfRange
from .linalg import IntMatrix, SmithForm, divisibility_chain, smith_normal_form
from .scomplex import ComplexPair, SimplicialComplex, make_pair


@dataclass(frozen=True)
class CohomologyGroup:
    betti: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        if self.betti < 0 or any(x <= 1 for x in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"invalid cohomology group data betti={self.betti} torsion={t}")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __bool__(self):
        # H^n != 0 counts torsion-only classes too
        return not self.is_zero

    def __add__(self, other: "CohomologyGroup") -> "CohomologyGroup":
        return direct_sum([self, other])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}


ZERO = CohomologyGroup()


def direct_sum(groups: Iterable[CohomologyGroup]) -> CohomologyGroup:
    groups = list(groups)
    betti = sum(g.betti for g in groups)
    torsion = divisibility_chain([t for g in groups for t in g.torsion])
    return CohomologyGroup(betti, tuple(t for t in torsion if t > 1))


@dataclass(eq=False)
class CochainComplexZ:
    """Cochain complex of free abelian groups in degrees ``lo..hi``.

    ``coboundaries[i]`` is delta in degree ``lo + i`` as a matrix of shape
    ``(size[n + 1], size[n])``; the top degree has no stored coboundary.
    Smith forms are cached per degree once computed.
    """

    lo: int
    sizes: Sequence[int]
    coboundaries: Sequence[IntMatrix]
    check: bool = True
    _snf: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.sizes = tuple(self.sizes)
        self.coboundaries = tuple(self.coboundaries)
        if len(self.coboundaries) != max(len(self.sizes) - 1, 0):
            raise ComplexNotExact("need one coboundary per degree below the top")
        for i, d in enumerate(self.coboundaries):
            if d.shape != (self.sizes[i + 1], self.sizes[i]):
                raise ComplexNotExact(
                    f"coboundary in degree {self.lo + i} has shape {d.shape}, "
                    f"expected {(self.sizes[i + 1], self.sizes[i])}"
                )
        if self.check:
            for i in range(len(self.coboundaries) - 1):
                if not (self.coboundaries[i + 1] @ self.coboundaries[i]).is_zero():
                    raise ComplexNotExact(f"delta o delta != 0 starting in degree {self.lo + i}")

    @property
    def hi(self) -> int:
        return self.lo + len(self.sizes) - 1

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def size(self, n: int) -> int:
        return self.sizes[n - self.lo] if self.lo <= n <= self.hi else 0

    def delta(self, n: int) -> IntMatrix:
        if self.lo <= n < self.hi:
            return self.coboundaries[n - self.lo]
        return IntMatrix.zero(self.size(n + 1), self.size(n))

    def smith(self, n: int) -> SmithForm:
        if n not in self._snf:
            self._snf[n] = smith_normal_form(self.delta(n))
        return self._snf[n]

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.size(n) for n in self.degrees)


def cohomology(cx: CochainComplexZ, n: int) -> CohomologyGroup:
    if not cx.lo <= n <= cx.hi:
        raise DegreeOutOfRange(f"degree {n} outside [{cx.lo}, {cx.hi}]")
    incoming = cx.smith(n - 1)
    betti = cx.size(n) - cx.smith(n).rank - incoming.rank
    return CohomologyGroup(betti, incoming.torsion)


def all_cohomology(cx: CochainComplexZ) -> dict[int, CohomologyGroup]:
    return {n: cohomology(cx, n) for n in cx.degrees}


def nonzero_degrees(cx: CochainComplexZ) -> dict[int, CohomologyGroup]:
    return {n: g for n, g in all_cohomology(cx).items() if g}


def _coboundary(lower: list, upper: list, lower_index: dict) -> IntMatrix:
    """delta from duals of ``lower`` (k-faces) to duals of ``upper`` ((k+1)-faces).

    The dual of tau maps to the sum over cofaces sigma of the sign with which
    tau occurs in the boundary of sigma; faces missing from ``lower_index``
    (those in the subcomplex) are skipped.
    """
    entries = {}
    for row, sigma in enumerate(upper):
        for i in range(len(sigma)):
            col = lower_index.get(sigma[:i] + sigma[i + 1:])
            if col is not None:
                entries[(row, col)] = -1 if i % 2 else 1
    return IntMatrix(len(upper), len(lower), entries)


@dataclass(frozen=True)
class RelativeBasis:
    """Per-degree ordered relative faces, kept alongside the complex."""

    faces: tuple[tuple, ...]

    def index(self, n: int) -> dict:
        return {f: i for i, f in enumerate(self.faces[n])} if 0 <= n < len(self.faces) else {}


def relative_basis(pair: ComplexPair) -> RelativeBasis:
    sub = pair.sub.faces
    top = max(pair.total.dimension, 0)
    return RelativeBasis(tuple(
        tuple(f for f in pair.total.faces_of_dim(k) if f not in sub) for k in range(top + 1)
    ))


def relative_cochain_complex(pair: ComplexPair, check: bool = True) -> CochainComplexZ:
    """C^*(total, sub): cochains on total vanishing on sub, degrees 0..dim(total)."""
    basis = relative_basis(pair)
    sizes = [len(b) for b in basis.faces]
    deltas = []
    for k in range(len(sizes) - 1):
        deltas.append(_coboundary(list(basis.faces[k]), list(basis.faces[k + 1]), basis.index(k)))
    return CochainComplexZ(0, sizes, deltas, check=check)


def cochain_complex(C: SimplicialComplex) -> CochainComplexZ:
    return relative_cochain_complex(make_pair(C, SimplicialComplex((), frozenset())))


def augmented_cochain_complex(C: SimplicialComplex) -> CochainComplexZ:
    """Degrees -1..dim(C); the degree -1 generator maps to the sum of all vertices."""
    faces = [C.faces_of_dim(k) for k in range(C.dimension + 1)]
    sizes = [1] + [len(f) for f in faces]
    deltas = []
    if faces:
        deltas.append(IntMatrix(len(faces[0]), 1, {(i, 0): 1 for i in range(len(faces[0]))}))
        for k in range(len(faces) - 1):
            idx = {f: i for i, f in enumerate(faces[k])}
            deltas.append(_coboundary(faces[k], faces[k + 1], idx))
    return CochainComplexZ(-1, sizes, deltas)


def reduced_cohomology(C: SimplicialComplex, n: int) -> CohomologyGroup:
    """Reduced cohomology; the empty complex has reduced H^{-1} = Z."""
    if n < -1:
        raise DegreeOutOfRange(f"reduced cohomology needs n >= -1, got {n}")
    cx = augmented_cochain_complex(C)
    if n > cx.hi:
        return ZERO
    return cohomology(cx, n)


def reduced_cohomology_all(C: SimplicialComplex) -> dict[int, CohomologyGroup]:
    return all_cohomology(augmented_cochain_complex(C))


def pair_cohomology(pair: ComplexPair) -> dict[int, CohomologyGroup]:
    return all_cohomology(relative_cochain_complex(pair))


def absolute_cohomology(C: SimplicialComplex) -> dict[int, CohomologyGroup]:
    return all_cohomology(cochain_complex(C))


def same_cohomology(a: dict[int, CohomologyGroup], b: dict[int, CohomologyGroup]) -> bool:
    """Equal in every degree, treating missing degrees as zero."""
    return all(a.get(n, ZERO) == b.get(n, ZERO) for n in set(a) | set(b))


def sum_dicts(dicts: Iterable[dict[int, CohomologyGroup]]) -> dict[int, CohomologyGroup]:
    dicts = list(dicts)
    degrees = sorted(reduce(set.union, (set(d) for d in dicts), set()))
    return {n: direct_sum(d.get(n, ZERO) for d in dicts) for n in degrees}
