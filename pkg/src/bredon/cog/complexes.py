"""Simple complexes of finite groups over a finite poset, and the Omega formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..errors import (
    ClassNotAntichain,
    DegreeMismatch,
    EmptyClass,
    InputError,
    NotASubgroup,
    NotASubgroupAlongEdge,
    NotStrict,
)
from ..pgroup import PermGroup
from ..poset import FinitePoset, order_complex, upper_set
from ..scomplex import ComplexPair, make_pair
from ..zcohomology import CohomologyGroup, pair_cohomology

ABSTRACT = "abstract_omega"
FINITE = "finite_embedded"


@dataclass(frozen=True, eq=False)
class SimpleComplexOfGroups:
    Q: FinitePoset
    mode: str
    omega_classes: tuple[tuple[str, ...], ...] | None = None
    G: PermGroup | None = None
    locals: Mapping[str, PermGroup] = field(default_factory=dict)

    def local(self, J: str) -> PermGroup:
        return self.locals[J]


def abstract_complex(Q: FinitePoset, classes: Iterable[Iterable[str]] | None = None) -> SimpleComplexOfGroups:
    """Abstract instance; omitted classes mean every element is its own class."""
    if classes is None:
        classes = [(x,) for x in Q.elements]
    rank = Q.rank
    cls = tuple(tuple(sorted(c, key=lambda x: rank.get(x, -1))) for c in classes)
    return SimpleComplexOfGroups(Q, ABSTRACT, omega_classes=cls)


def finite_complex(Q: FinitePoset, G: PermGroup, local_groups: Mapping[str, PermGroup]) -> SimpleComplexOfGroups:
    return SimpleComplexOfGroups(Q, FINITE, G=G, locals=dict(local_groups))


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    checks: tuple[str, ...]


def validate(scog: SimpleComplexOfGroups) -> ValidationReport:
    Q = scog.Q
    checks = []
    if scog.mode == ABSTRACT:
        seen: dict[str, int] = {}
        for i, c in enumerate(scog.omega_classes or ()):
            if not c:
                raise EmptyClass(f"Omega class #{i} is empty")
            for x in c:
                if x not in Q:
                    raise InputError(f"Omega class #{i} names unknown element {x!r}")
                if x in seen:
                    raise InputError(f"element {x!r} lies in classes #{seen[x]} and #{i}")
                seen[x] = i
            if not Q.is_antichain(c):
                raise ClassNotAntichain(f"Omega class {list(c)} contains comparable elements")
        missing = [x for x in Q.elements if x not in seen]
        if missing:
            raise InputError(f"Omega classes do not cover {missing}")
        checks.append(f"{len(scog.omega_classes)} classes partition Q into antichains")
        return ValidationReport(scog.mode, tuple(checks))

    if scog.mode != FINITE:
        raise InputError(f"unknown mode {scog.mode!r}")
    G = scog.G
    for J in Q.elements:
        if J not in scog.locals:
            raise InputError(f"no local group given for {J!r}")
        P = scog.locals[J]
        if P.degree != G.degree:
            raise DegreeMismatch(f"local group at {J!r} has degree {P.degree}, G has {G.degree}")
        if not P.element_set <= G.element_set:
            raise NotASubgroup(f"local group at {J!r} is not contained in G")
    extra = set(scog.locals) - set(Q.elements)
    if extra:
        raise InputError(f"local groups given for unknown elements {sorted(extra)}")
    checks.append(f"{len(Q)} local groups are subgroups of G (order {G.order})")
    for J, T in Q.covers():
        a, b = scog.locals[J].element_set, scog.locals[T].element_set
        if not a <= b:
            raise NotASubgroupAlongEdge(f"P_{J} is not contained in P_{T} although {J} < {T}")
        if a == b:
            raise NotStrict(f"P_{J} = P_{T} although {J} < {T}")
    checks.append("inclusions strict along every covering relation")
    return ValidationReport(scog.mode, tuple(checks))


def omega_partition(scog: SimpleComplexOfGroups) -> list[tuple[str, ...]]:
    """Elements of Q grouped by equality of local groups, in Q order."""
    if scog.mode == ABSTRACT:
        return [tuple(c) for c in scog.omega_classes]
    classes: dict[frozenset, list[str]] = {}
    for J in scog.Q.elements:
        classes.setdefault(scog.locals[J].element_set, []).append(J)
    return [tuple(c) for c in classes.values()]


def k_pair(Q: FinitePoset, omega: Sequence[str]) -> ComplexPair:
    """(K_Omega, K_{>Omega}): order complexes of the upper and strict upper set."""
    return make_pair(
        order_complex(Q, upper_set(Q, omega, strict=False)),
        order_complex(Q, upper_set(Q, omega, strict=True)),
    )


@dataclass(frozen=True)
class ClassReport:
    omega: tuple[str, ...]
    nonzero: dict[int, CohomologyGroup]

    @property
    def top_degree(self) -> int | None:
        return max(self.nonzero) if self.nonzero else None

    def to_dict(self) -> dict:
        return {
            "omega": list(self.omega),
            "nonzero": {str(n): g.to_dict() for n, g in sorted(self.nonzero.items())},
            "top_degree": self.top_degree,
        }


def cd_from_omega(Q: FinitePoset, partition: Iterable[Iterable[str]]) -> tuple[int, list[ClassReport]]:
    """max{n : H^n(K_Omega, K_{>Omega}) != 0} over the classes of the partition."""
    rows = []
    for omega in partition:
        omega = tuple(omega)
        if not omega:
            raise EmptyClass("Omega class is empty")
        groups = pair_cohomology(k_pair(Q, omega))
        rows.append(ClassReport(omega, {n: g for n, g in groups.items() if g}))
    dim = max((r.top_degree for r in rows if r.top_degree is not None), default=0)
    return dim, rows
