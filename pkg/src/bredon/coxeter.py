"""Coxeter systems, spherical subsets, the nerve, and the two dimension formulas.

``m`` entries are positive integers or ``math.inf``; in JSON files an
infinite entry is written as ``0``.  Finite-type recognition matches each
connected component of the labelled Coxeter diagram against the finite
catalogue (A_n, B_n, D_n, E_6-8, F_4, H_3, H_4, I_2(m)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .errors import InvalidCoxeterMatrix, InvalidOrder, UnknownGenerator
from .poset import FinitePoset, build_poset, order_complex, upper_set
from .scomplex import SimplicialComplex, barycentric_subdivision, from_maximal_faces, link
from .zcohomology import CohomologyGroup, reduced_cohomology_all, same_cohomology

INF = math.inf


@dataclass(frozen=True)
class CoxeterMatrix:
    generators: tuple[str, ...]
    m: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        m = tuple(tuple(INF if (x == INF or x == 0) else int(x) for x in row) for row in self.m)
        n = len(gens)
        if len(set(gens)) != n:
            raise InvalidCoxeterMatrix("generator names must be unique")
        if len(m) != n or any(len(row) != n for row in m):
            raise InvalidCoxeterMatrix(f"matrix must be {n}x{n}")
        for i in range(n):
            if m[i][i] != 1:
                raise InvalidCoxeterMatrix(f"m[{gens[i]}][{gens[i]}] must be 1, got {m[i][i]}")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise InvalidCoxeterMatrix(f"matrix is not symmetric at ({gens[i]}, {gens[j]})")
                if i != j and m[i][j] < 2:
                    raise InvalidCoxeterMatrix(f"m[{gens[i]}][{gens[j]}] must be >= 2 or infinity")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "m", m)

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.generators)}

    def label(self, s: str, t: str) -> float:
        return self.m[self.index[s]][self.index[t]]

    def restrict(self, J: Iterable[str]) -> "CoxeterMatrix":
        J = self.sort(J)
        return CoxeterMatrix(J, tuple(tuple(self.label(s, t) for t in J) for s in J))

    def sort(self, J: Iterable[str]) -> tuple[str, ...]:
        J = set(J)
        for s in J:
            if s not in self.index:
                raise UnknownGenerator(f"unknown generator {s!r}")
        return tuple(s for s in self.generators if s in J)

    def file_matrix(self) -> list[list[int]]:
        return [[0 if x == INF else int(x) for x in row] for row in self.m]


def coxeter_matrix(generators: Sequence[str], m: Sequence[Sequence[float]]) -> CoxeterMatrix:
    return CoxeterMatrix(tuple(generators), tuple(tuple(row) for row in m))


# --- finite-type catalogue -------------------------------------------------

def _path(n: int, labels: dict[int, int] | None = None) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for i in range(n - 1):
        g.add_edge(i, i + 1, m=(labels or {}).get(i, 3))
    return g


def _star(arms: tuple[int, ...]) -> nx.Graph:
    """Tree with one branch vertex 0 and arms of the given lengths, all labels 3."""
    g = nx.Graph()
    g.add_node(0)
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            g.add_edge(prev, nxt, m=3)
            prev = nxt
            nxt += 1
    return g


def catalog_diagrams(n: int, dihedral_label: float | None = None) -> dict[str, nx.Graph]:
    """Connected finite-type diagrams on ``n`` nodes (edges with m >= 3)."""
    out: dict[str, nx.Graph] = {}
    if n == 1:
        out["A1"] = _path(1)
        return out
    out[f"A{n}"] = _path(n)
    if n >= 3:
        out[f"B{n}"] = _path(n, {n - 2: 4})
    if n >= 4:
        out[f"D{n}"] = _star((1, 1, n - 3))
    if n in (6, 7, 8):
        out[f"E{n}"] = _star((1, 2, n - 4))
    if n == 4:
        out["F4"] = _path(4, {1: 4})
        out["H4"] = _path(4, {0: 5})
    if n == 3:
        out["H3"] = _path(3, {0: 5})
    if n == 2 and dihedral_label is not None and dihedral_label != INF and dihedral_label >= 4:
        # B2 = I2(4), G2 = I2(6)
        name = "B2" if dihedral_label == 4 else f"I2({int(dihedral_label)})"
        out[name] = _path(2, {0: int(dihedral_label)})
    return out


def diagram(M: CoxeterMatrix, J: Iterable[str] | None = None) -> nx.Graph:
    J = M.generators if J is None else M.sort(J)
    g = nx.Graph()
    g.add_nodes_from(J)
    for s, t in combinations(J, 2):
        if M.label(s, t) >= 3:
            g.add_edge(s, t, m=M.label(s, t))
    return g


def _invariants(g: nx.Graph):
    return (
        g.number_of_nodes(),
        sorted(d["m"] for _, _, d in g.edges(data=True)),
        sorted(d for _, d in g.degree()),
    )


def classify_component(g: nx.Graph) -> str | None:
    """Catalogue name of a connected labelled diagram, or None if not finite type."""
    if any(d["m"] == INF for _, _, d in g.edges(data=True)):
        return None
    n = g.number_of_nodes()
    label = next(iter(d["m"] for _, _, d in g.edges(data=True)), None) if n == 2 else None
    inv = _invariants(g)
    for name, cand in catalog_diagrams(n, label).items():
        if _invariants(cand) != inv:
            continue
        if GraphMatcher(g, cand, edge_match=lambda a, b: a["m"] == b["m"]).is_isomorphic():
            return name
    return None


def finite_type_components(M: CoxeterMatrix, J: Iterable[str]) -> list[str | None]:
    g = diagram(M, J)
    return [classify_component(g.subgraph(c)) for c in sorted(nx.connected_components(g), key=sorted)]


def is_finite_type(M: CoxeterMatrix, J: Iterable[str] | None = None) -> bool:
    J = M.generators if J is None else M.sort(J)
    return all(name is not None for name in finite_type_components(M, J))


# --- spherical poset and nerve ----------------------------------------------

def subset_id(J: Iterable[str]) -> str:
    return "{" + ",".join(J) + "}"


@dataclass(frozen=True)
class SphericalPoset:
    poset: FinitePoset
    subsets: dict[str, tuple[str, ...]]  # element id -> J in generator order

    def id_of(self, J: Iterable[str]) -> str:
        return subset_id(J)


def spherical_subsets(M: CoxeterMatrix) -> list[tuple[str, ...]]:
    """Spherical J by increasing size; J is tested only if all its maximal
    proper subsets passed."""
    found: list[tuple[str, ...]] = [()]
    layer = {()}
    gens = M.generators
    for k in range(1, len(gens) + 1):
        nxt = set()
        for J in combinations(gens, k):
            if all(J[:i] + J[i + 1:] in layer for i in range(k)) and is_finite_type(M, J):
                nxt.add(J)
        if not nxt:
            break
        found.extend(sorted(nxt, key=lambda J: [M.index[s] for s in J]))
        layer = nxt
    return found


def spherical_poset(M: CoxeterMatrix) -> SphericalPoset:
    subsets = spherical_subsets(M)
    ids = [subset_id(J) for J in subsets]
    sets = [set(J) for J in subsets]
    rel = [(ids[a], ids[b]) for a in range(len(subsets)) for b in range(len(subsets))
           if len(subsets[a]) + 1 == len(subsets[b]) and sets[a] < sets[b]]
    return SphericalPoset(build_poset(ids, rel), dict(zip(ids, subsets)))


@dataclass(frozen=True)
class Nerve:
    complex: SimplicialComplex


def nerve(M: CoxeterMatrix, Q: SphericalPoset | None = None) -> Nerve:
    Q = Q or spherical_poset(M)
    return Nerve(from_maximal_faces(M.generators, [J for J in Q.subsets.values() if J]))


# --- dimension formulas -----------------------------------------------------

@dataclass(frozen=True)
class SubsetReport:
    """Nonzero reduced cohomology of the complex attached to one spherical J."""

    J: tuple[str, ...]
    reduced: dict[int, CohomologyGroup]

    @property
    def contribution(self) -> int | None:
        """Largest n with reduced H^{n-1} != 0, or None."""
        return max(self.reduced) + 1 if self.reduced else None

    def to_dict(self) -> dict:
        return {
            "J": list(self.J),
            "nonzero_reduced": {str(k): g.to_dict() for k, g in sorted(self.reduced.items())},
            "contribution": self.contribution,
        }


def _nonzero(groups: dict[int, CohomologyGroup]) -> dict[int, CohomologyGroup]:
    return {k: g for k, g in groups.items() if g}


def _headline(rows: list[SubsetReport]) -> int:
    return max((r.contribution for r in rows if r.contribution is not None), default=0)


def link_complexes(M: CoxeterMatrix, Q: SphericalPoset | None = None):
    """(J, Lk(sigma_J, L)) for every spherical J; J = {} gives L itself."""
    Q = Q or spherical_poset(M)
    L = nerve(M, Q).complex
    return [(J, link(L, J)) for J in Q.subsets.values()]


def upper_complexes(M: CoxeterMatrix, Q: SphericalPoset | None = None):
    """(J, K_{>J}) for every spherical J."""
    Q = Q or spherical_poset(M)
    P = Q.poset
    return [(J, order_complex(P, upper_set(P, [j], strict=True))) for j, J in Q.subsets.items()]


def vcd_link_formula(M: CoxeterMatrix) -> tuple[int, list[SubsetReport]]:
    rows = [SubsetReport(J, _nonzero(reduced_cohomology_all(Lk))) for J, Lk in link_complexes(M)]
    return _headline(rows), rows


def cd_building_formula(M: CoxeterMatrix) -> tuple[int, list[SubsetReport]]:
    rows = [SubsetReport(J, _nonzero(reduced_cohomology_all(Kj))) for J, Kj in upper_complexes(M)]
    return _headline(rows), rows


def cross_check(M: CoxeterMatrix) -> list[tuple[tuple[str, ...], bool]]:
    """Per spherical J: does K_{>J} have the cohomology of Lk(sigma_J, L)?

    For J = {} the comparison also runs against the barycentric subdivision
    of L, which K_{>{}} realizes literally.
    """
    Q = spherical_poset(M)
    links = dict(link_complexes(M, Q))
    out = []
    for J, Kj in upper_complexes(M, Q):
        a = reduced_cohomology_all(Kj)
        ok = same_cohomology(a, reduced_cohomology_all(links[J]))
        if not J:
            ok = ok and same_cohomology(a, reduced_cohomology_all(barycentric_subdivision(links[J])))
        out.append((J, ok))
    return out


def graph_product_to_coxeter(vertices: Sequence[tuple[str, int]], edges: Iterable[tuple[str, str]]) -> CoxeterMatrix:
    """Right-angled Coxeter matrix of a graph product of finite groups.

    ``vertices`` pairs each vertex name with the order of its group.
    """
    names = [v for v, _ in vertices]
    for v, order in vertices:
        if int(order) < 2:
            raise InvalidOrder(f"vertex {v!r} has group order {order}; need >= 2")
    idx = {v: i for i, v in enumerate(names)}
    n = len(names)
    m = [[1 if i == j else INF for j in range(n)] for i in range(n)]
    for a, b in edges:
        if a not in idx or b not in idx:
            raise UnknownGenerator(f"edge ({a!r}, {b!r}) references an unknown vertex")
        if a == b:
            raise InvalidCoxeterMatrix(f"loop at {a!r}; graph must be simple")
        m[idx[a]][idx[b]] = m[idx[b]][idx[a]] = 2
    return coxeter_matrix(names, m)


# --- standard matrices ------------------------------------------------------

def from_diagram(name: str, generators: Sequence[str] | None = None) -> CoxeterMatrix:
    """Coxeter matrix of a catalogue type such as 'A3', 'B3', 'H3', 'I2(5)'."""
    name = {"B2": "I2(4)", "G2": "I2(6)"}.get(name, name)
    if name.startswith("I2("):
        mval = name[3:-1]
        label = INF if mval in ("inf", "oo", "0") else int(mval)
        n, g = 2, _path(2, {0: label})
    else:
        n = int(name[1:])
        g = catalog_diagrams(n).get(name)
        if g is None:
            raise InvalidCoxeterMatrix(f"unknown finite type {name!r}")
    gens = list(generators or [f"s{i + 1}" for i in range(n)])
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for a, b, d in g.edges(data=True):
        m[a][b] = m[b][a] = d["m"]
    return coxeter_matrix(gens, m)


def affine_A(n: int) -> CoxeterMatrix:
    """Affine type A~_{n-1} on n >= 3 generators: an n-cycle of 3s."""
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        j = (i + 1) % n
        m[i][j] = m[j][i] = 3
    return coxeter_matrix([f"s{i + 1}" for i in range(n)], m)


def right_angled_cycle(n: int) -> CoxeterMatrix:
    vs = [(f"s{i + 1}", 2) for i in range(n)]
    return graph_product_to_coxeter(vs, [(f"s{i + 1}", f"s{(i + 1) % n + 1}") for i in range(n)])
