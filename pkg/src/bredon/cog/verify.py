"""Brute-force checks of the structural statements on a finite development."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..pgroup import conjugate_set
from ..poset import chains, order_complex, upper_set
from ..zcohomology import (
    ZERO,
    CohomologyGroup,
    all_cohomology,
    pair_cohomology,
    reduced_cohomology_all,
    relative_cochain_complex,
    sum_dicts,
)
from .bredon import bredon_cochain_complex
from .complexes import k_pair
from .development import Development, FixedPair, fixed_pair, fixed_vertices, l_set, rho_matrices


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    left: CohomologyGroup
    right: CohomologyGroup

    @property
    def match(self) -> bool:
        return self.left == self.right

    def to_dict(self) -> dict:
        return {"degree": self.degree, "left": self.left.to_dict(),
                "right": self.right.to_dict(), "match": self.match}


@dataclass
class Verdict:
    """Outcome of one check at one J: degree table plus named boolean checks."""

    J: str
    theorem: str
    rows: list[DegreeRow] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows) and all(self.checks.values())

    def failures(self) -> list[str]:
        out = [f"degree {r.degree}: {r.left} vs {r.right}" for r in self.rows if not r.match]
        return out + [name for name, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        return {
            "J": self.J,
            "theorem": self.theorem,
            "passed": self.passed,
            "degrees": [r.to_dict() for r in self.rows],
            "checks": dict(self.checks),
            "notes": list(self.notes),
        }


def _table(left: dict, right: dict) -> list[DegreeRow]:
    degrees = sorted(set(left) | set(right))
    return [DegreeRow(n, left.get(n, ZERO), right.get(n, ZERO)) for n in degrees]


class _KCache:
    """Cohomology of (K_Omega, K_>Omega), shared across J and g."""

    def __init__(self, dev: Development):
        self.dev = dev
        self.groups: dict[tuple, dict] = {}

    def __call__(self, omega) -> dict:
        key = tuple(sorted(omega))
        if key not in self.groups:
            self.groups[key] = pair_cohomology(k_pair(self.dev.Q, omega))
        return self.groups[key]


def verify_decomposition(dev: Development, J: str, fp: FixedPair | None = None, kcache=None) -> Verdict:
    """Fixed-pair cohomology against the sum over L(J), plus the cochain-level bijection.

    The checks are: the rho images cover every relative cell of the fixed
    pair exactly once, no rho image touches a singular cell, and each rho
    commutes with the coboundaries.
    """
    fp = fp or fixed_pair(dev, J)
    kcache = kcache or _KCache(dev)
    xcx = relative_cochain_complex(fp.pair)
    left = all_cohomology(xcx)
    L = l_set(dev, J)
    right = sum_dicts([kcache(m.omega) for m in L.members]) if L.members else {}
    out = Verdict(J, "decomposition", _table(left, right))
    out.notes.append(f"|L(J)| = {len(L)}")

    top = xcx.hi
    hits = [[0] * xcx.size(n) for n in range(top + 1)]
    commutes = clean = True
    for m in L.members:
        rm = rho_matrices(dev, J, fp, m, top)
        clean &= rm.vanishes_on_sing
        kcx = relative_cochain_complex(k_pair(dev.Q, m.omega), check=False)
        for n, R in enumerate(rm.matrices):
            for (row, _col) in R.entries:
                hits[n][row] += 1
            if n < top:
                lhs = xcx.delta(n) @ R
                rhs = rm.matrices[n + 1] @ kcx.delta(n)
                commutes &= lhs.entries == rhs.entries
    out.checks["rho_bijection"] = all(c == 1 for level in hits for c in level)
    out.checks["rho_vanishes_on_sing"] = clean
    out.checks["rho_chain_map"] = commutes
    return out



def lemma34_check(dev: Development, J: str, fp: FixedPair | None = None) -> Verdict:
    """Cellwise: with F = X^{P_J}, S = its singular part and g in L(J),
    (S & gK) | gK_Omega == F & gK and (S & gK) & gK_Omega == gK_>Omega."""
    fp = fp or fixed_pair(dev, J)
    Q = dev.Q
    fixed, sing = fp.fixed.faces, fp.sing.faces
    all_chains = list(chains(Q))
    out = Verdict(J, "lemma34")
    for m in l_set(dev, J).members:
        up = upper_set(Q, m.omega)
        strict = upper_set(Q, m.omega, strict=True)
        gK = {dev.translate(c, m.g): c for c in all_chains}
        s_gk = {cell for cell in gK if cell in sing}
        f_gk = {cell for cell in gK if cell in fixed}
        g_omega = {cell for cell, c in gK.items() if up.issuperset(c)}
        g_strict = {cell for cell, c in gK.items() if strict.issuperset(c)}
        tag = ".".join(map(str, m.g))
        out.checks[f"union@{tag}"] = (s_gk | g_omega) == f_gk
        out.checks[f"intersection@{tag}"] = (s_gk & g_omega) == g_strict
    return out


def verify_bredon(dev: Development, J: str, fp: FixedPair | None = None) -> Verdict:
    """Bredon cohomology with Q_K coefficients, K = P_J, against the fixed pair."""
    fp = fp or fixed_pair(dev, J)
    bcx = bredon_cochain_complex(dev, J)
    xcx = relative_cochain_complex(fp.pair)
    out = Verdict(J, "bredon", _table(all_cohomology(xcx), all_cohomology(bcx)))
    width = max(xcx.hi, bcx.hi) + 1
    out.checks["basis_counts"] = all(xcx.size(n) == bcx.size(n) for n in range(width))
    return out


def stabilizer_admissible(dev: Development) -> bool:
    """Every chain's pointwise stabilizer is the stabilizer of its bottom vertex."""
    return all(dev.cell_stabilizer(c) == dev.stabilizer(c[0]) for c in dev.X.faces)


def probe_subgroups(dev: Development) -> list[tuple[str, frozenset]]:
    """The trivial group and one local group per G-conjugacy class."""
    e = tuple(range(dev.scog.G.degree))
    found: list[tuple[str, frozenset]] = [("1", frozenset([e]))]
    for U in dev.Q.elements:
        H = dev.local_set(U)
        if any(len(H) == len(F) and any(conjugate_set(H, x) == F for x in dev.elements)
               for _, F in found):
            continue
        found.append((f"P_{U}", H))
    return found


def check_acyclicity(dev: Development) -> list[Verdict]:
    """Reduced cohomology of X^H for each probe subgroup H; all zero is necessary
    for contractibility.  An empty X^H has reduced H^-1 = Z and fails."""
    out = []
    for name, H in probe_subgroups(dev):
        fixed, _ = fixed_vertices(dev, H)
        groups = reduced_cohomology_all(order_complex(dev.P, fixed))
        v = Verdict(name, "acyclic")
        v.checks["reduced_cohomology_vanishes"] = not any(groups.values())
        v.notes += [f"reduced H^{n} = {g}" for n, g in groups.items() if g]
        out.append(v)
    return out
