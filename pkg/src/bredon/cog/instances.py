"""Named finite instances and a random instance generator."""

from __future__ import annotations

import random
from functools import lru_cache

from ..errors import BredonError
from ..pgroup import (
    PermGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_cycles,
    generated,
    subgroups_two_generated,
    symmetric,
)
from ..poset import build_poset
from .complexes import SimpleComplexOfGroups, finite_complex, validate


def s3_chain() -> SimpleComplexOfGroups:
    """U < T with P_U = <(0 1)> inside P_T = S_3."""
    Q = build_poset(["U", "T"], [("U", "T")])
    G = symmetric(3)
    return finite_complex(Q, G, {"U": generated(3, [from_cycles(3, [0, 1])]), "T": G})


def s4_branch() -> SimpleComplexOfGroups:
    """<(0 1)> < <(0 1),(2 3)> < S_4, with a second branch <(0 1 2)> < S_4."""
    Q = build_poset(["A", "B", "C", "T"], [("A", "B"), ("B", "T"), ("C", "T")])
    G = symmetric(4)
    return finite_complex(Q, G, {
        "A": generated(4, [from_cycles(4, [0, 1])]),
        "B": generated(4, [from_cycles(4, [0, 1]), from_cycles(4, [2, 3])]),
        "C": generated(4, [from_cycles(4, [0, 1, 2])]),
        "T": G,
    })


def d4_square() -> SimpleComplexOfGroups:
    """Two reflections of the square below D_4, over a trivial bottom group."""
    G = dihedral(4)
    Q = build_poset(["E", "R1", "R2", "T"], [("E", "R1"), ("E", "R2"), ("R1", "T"), ("R2", "T")])
    refl = G.generators[1]
    other = from_cycles(4, [0, 2])
    return finite_complex(Q, G, {
        "E": generated(4, []),
        "R1": generated(4, [refl]),
        "R2": generated(4, [other]),
        "T": G,
    })


def index_two_point() -> SimpleComplexOfGroups:
    """Q a single element whose local group has index 2: the development is a 0-sphere."""
    Q = build_poset(["J"], [])
    G = symmetric(3)
    return finite_complex(Q, G, {"J": alternating(3)})


def group_catalog() -> dict[str, PermGroup]:
    """Small groups used for random instances, all of order at most 120."""
    return {
        "S3": symmetric(3),
        "D4": dihedral(4),
        "A4": alternating(4),
        "C2xC2xC2": direct_product(cyclic(2), cyclic(2), cyclic(2)),
        "S3xC2": direct_product(symmetric(3), cyclic(2)),
        "S4": symmetric(4),
        "D4xC2": direct_product(dihedral(4), cyclic(2)),
        "S3xS3": direct_product(symmetric(3), symmetric(3)),
        "A5": alternating(5),
        "S5": symmetric(5),
    }


@lru_cache(maxsize=None)
def _lattice(name: str) -> tuple[PermGroup, tuple[PermGroup, ...]]:
    G = group_catalog()[name]
    subs = list(subgroups_two_generated(G))
    if not any(H.element_set == G.element_set for H in subs):
        subs.append(G)
    return G, tuple(subs)


def random_poset(rng: random.Random, size: int, density: float = 0.45):
    names = [f"q{i}" for i in range(size)]
    rel = [(names[i], names[j]) for i in range(size) for j in range(i + 1, size) if rng.random() < density]
    return build_poset(names, rel)


def random_instance(
    rng: random.Random,
    max_elements: int = 6,
    groups: list[str] | None = None,
    attempts: int = 200,
) -> tuple[str, SimpleComplexOfGroups]:
    """A random valid finite instance; local groups are assigned from the top down.

    Each element receives a subgroup of the intersection of the groups above
    it that differs from every one of them, which forces strict inclusions.
    """
    names = groups or list(group_catalog())
    for _ in range(attempts):
        gname = rng.choice(names)
        G, subs = _lattice(gname)
        Q = random_poset(rng, rng.randint(1, max_elements))
        locals_: dict[str, PermGroup] = {}
        ok = True
        for x in reversed(Q.elements):
            above = [locals_[y] for y in Q.above(x)]
            if above:
                meet = frozenset.intersection(*(H.element_set for H in above))
                pool = [H for H in subs if H.element_set <= meet
                        and all(H.element_set != A.element_set for A in above)]
            else:
                pool = list(subs)
            if not pool:
                ok = False
                break
            locals_[x] = rng.choice(pool)
        if not ok:
            continue
        scog = finite_complex(Q, G, locals_)
        try:
            validate(scog)
        except BredonError:
            continue
        return gname, scog
    raise RuntimeError("no valid random instance found")
