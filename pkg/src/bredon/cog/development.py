"""Finite developments and the fixed-point pairs of their local groups.

The development of a finite instance is the poset of pairs ``(gP_J, J)``
with ``(gP_J, J) < (g'P_T, T)`` iff ``J < T`` and ``gP_T = g'P_T``.  A coset
is named by its least element under the chosen total order on G, so the
vertex ``(gP_J, J)`` has identifier ``"J@i.j.k"`` where ``i.j.k`` is that
representative's image tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import InputError, NotRelative
from ..linalg import IntMatrix
from ..pgroup import OrderKey, Permutation, conjugate_set, inverse, mul
from ..poset import FinitePoset, build_poset, order_complex, upper_set
from ..scomplex import ComplexPair, SimplicialComplex, make_pair
from ..zcohomology import relative_basis
from .complexes import FINITE, SimpleComplexOfGroups, k_pair, validate


def _render(g: Permutation) -> str:
    return ".".join(str(x) for x in g)


@dataclass(eq=False)
class Development:
    scog: SimpleComplexOfGroups
    key: OrderKey
    elements: tuple[Permutation, ...]           # G sorted by the total order
    coset_index: dict[str, dict[Permutation, int]]
    coset_reps: dict[str, list[Permutation]]    # least element of each coset
    P: FinitePoset
    vertex_of: dict[tuple[str, int], str]
    info: dict[str, tuple[str, int]]            # vertex id -> (J, coset index)
    _stab: dict[str, frozenset] = field(default_factory=dict, repr=False)

    @cached_property
    def X(self) -> SimplicialComplex:
        return order_complex(self.P)

    @property
    def Q(self) -> FinitePoset:
        return self.scog.Q

    def local_set(self, J: str) -> frozenset:
        return self.scog.locals[J].element_set

    def vertex(self, J: str, g: Permutation) -> str:
        """Identifier of (g P_J, J)."""
        return self.vertex_of[(J, self.coset_index[J][g])]

    def rep(self, v: str) -> Permutation:
        J, i = self.info[v]
        return self.coset_reps[J][i]

    def type_of(self, cell) -> tuple[str, ...]:
        return tuple(self.info[v][0] for v in cell)

    def stabilizer(self, v: str) -> frozenset:
        """g P_J g^-1 for the vertex (g P_J, J)."""
        if v not in self._stab:
            J, _ = self.info[v]
            self._stab[v] = conjugate_set(self.local_set(J), inverse(self.rep(v)))
        return self._stab[v]

    def cell_stabilizer(self, cell) -> frozenset:
        """Elementwise stabilizer: intersection over the vertices."""
        out = self.stabilizer(cell[0])
        for v in cell[1:]:
            out = out & self.stabilizer(v)
        return out

    def translate(self, chain, g: Permutation) -> tuple[str, ...]:
        """The simplex g.chain of X for a chain of Q (the map s_g)."""
        return tuple(self.vertex(V, g) for V in chain)

    def precedes(self, a: Permutation, b: Permutation) -> bool:
        return self.key(a) < self.key(b)

    def counts(self) -> list[int]:
        return self.X.f_vector()


def develop(scog: SimpleComplexOfGroups, key: OrderKey | None = None, cap: int | None = None) -> Development:
    if scog.mode != FINITE:
        raise InputError("develop needs a finite_embedded instance")
    validate(scog)
    key = key or (lambda g: g)
    els = tuple(sorted(scog.G.elements(cap), key=key))
    for H in scog.locals.values():
        H.elements(cap)
    coset_index: dict[str, dict[Permutation, int]] = {}
    coset_reps: dict[str, list[Permutation]] = {}
    vertex_of: dict[tuple[str, int], str] = {}
    info: dict[str, tuple[str, int]] = {}
    ids: list[str] = []
    for J in scog.Q.elements:
        H = scog.locals[J].elements()
        table: dict[Permutation, int] = {}
        reps: list[Permutation] = []
        for g in els:
            if g in table:
                continue
            idx = len(reps)
            reps.append(g)
            for h in H:
                table[mul(g, h)] = idx
        coset_index[J] = table
        coset_reps[J] = reps
        for idx, g in enumerate(reps):
            vid = f"{J}@{_render(g)}"
            vertex_of[(J, idx)] = vid
            info[vid] = (J, idx)
            ids.append(vid)
    relations = []
    for J in scog.Q.elements:
        for T in scog.Q.above(J):
            for idx, g in enumerate(coset_reps[J]):
                relations.append((vertex_of[(J, idx)], vertex_of[(T, coset_index[T][g])]))
    P = build_poset(ids, relations)
    return Development(scog, key, els, coset_index, coset_reps, P, vertex_of, info)


@dataclass(frozen=True)
class FixedPair:
    J: str
    pair: ComplexPair

    @property
    def fixed(self) -> SimplicialComplex:
        return self.pair.total

    @property
    def sing(self) -> SimplicialComplex:
        return self.pair.sub


def fixed_vertices(dev: Development, K: frozenset) -> tuple[list[str], list[str]]:
    """Vertices fixed by K, and those whose stabilizer strictly contains K."""
    fixed, sing = [], []
    for v in dev.P.elements:
        st = dev.stabilizer(v)
        if K <= st:
            fixed.append(v)
            if len(st) > len(K):
                sing.append(v)
    return fixed, sing


def fixed_pair(dev: Development, J: str) -> FixedPair:
    """(X^{P_J}, X^{P_J}_sing) as order complexes of F(J) and F(J)_sing."""
    fixed, sing = fixed_vertices(dev, dev.local_set(J))
    return FixedPair(J, make_pair(order_complex(dev.P, fixed), order_complex(dev.P, sing)))


@dataclass(frozen=True)
class LMember:
    g: Permutation
    omega: tuple[str, ...]


@dataclass(frozen=True)
class LSet:
    J: str
    members: tuple[LMember, ...]

    def __len__(self):
        return len(self.members)


def l_set(dev: Development, J: str) -> LSet:
    """Largest element of each right coset P_J g whose conjugate g^-1 P_J g is local."""
    PJ = dev.local_set(J)
    by_set: dict[frozenset, list[str]] = {}
    for U in dev.Q.elements:
        by_set.setdefault(dev.local_set(U), []).append(U)
    seen: set = set()
    members = []
    for g in dev.elements:
        if g in seen:
            continue
        right = [mul(h, g) for h in PJ]
        seen.update(right)
        top = max(right, key=dev.key)
        omega = by_set.get(conjugate_set(PJ, top))
        if omega:
            members.append(LMember(top, tuple(omega)))
    members.sort(key=lambda m: dev.key(m.g))
    return LSet(J, tuple(members))


# --- the rho maps -------------------------------------------------------------

def _rho_condition(dev: Development, g: Permutation, upper: frozenset, cell):
    """The chain sigma of Q with cell = g.sigma and sigma inside K_Omega, else None.

    A cell v.sigma has v determined up to P_{J0} (J0 its bottom type); since
    g^-1 P_J g lies in P_{J0} whenever sigma is in K_Omega, "v in P_J g" holds
    for some representative exactly when the cell is g.sigma.
    """
    sigma = dev.type_of(cell)
    if not upper.issuperset(sigma):
        return None
    if dev.coset_index[sigma[0]][g] != dev.info[cell[0]][1]:
        return None
    return sigma


def rho(dev: Development, J: str, g: Permutation, f: dict, omega=None) -> dict:
    """Apply rho^J_g to a cochain ``f`` on K_Omega (dict chain -> int).

    Returns the image as a dict on cells of X^{P_J}, nonzero values only.
    """
    if omega is None:
        omega = next((m.omega for m in l_set(dev, J).members if m.g == g), None)
        if omega is None:
            raise InputError(f"{g} is not in L({J})")
    Q = dev.Q
    upper = upper_set(Q, omega)
    strict = upper_set(Q, omega, strict=True)
    for sigma, val in f.items():
        if not val:
            continue
        if not upper.issuperset(sigma):
            raise NotRelative(f"cochain is nonzero on {sigma}, which is not in K_Omega")
        if strict.issuperset(sigma):
            raise NotRelative(f"cochain is nonzero on {sigma}, which lies in K_>Omega")
    fp = fixed_pair(dev, J)
    out = {}
    for cell in fp.fixed.faces:
        sigma = _rho_condition(dev, g, upper, cell)
        if sigma is not None and f.get(sigma, 0):
            out[cell] = f[sigma]
    return out


@dataclass
class RhoMatrices:
    """rho^J_g in every degree, between relative bases.

    ``matrices[n]`` has one row per relative n-cell of (X^{P_J}, X^{P_J}_sing)
    and one column per relative n-cell of (K_Omega, K_>Omega).
    ``vanishes_on_sing`` records that no singular cell received a value.
    """

    g: Permutation
    omega: tuple[str, ...]
    matrices: list[IntMatrix]
    vanishes_on_sing: bool


def rho_matrices(dev: Development, J: str, fp: FixedPair, member: LMember, top: int) -> RhoMatrices:
    Q = dev.Q
    upper = upper_set(Q, member.omega)
    kp = k_pair(Q, member.omega)
    kbasis = relative_basis(kp)
    xbasis = relative_basis(fp.pair)
    sing = fp.sing.faces
    mats = []
    clean = True
    for n in range(top + 1):
        cols = kbasis.index(n)
        rows = xbasis.index(n)
        entries = {}
        for cell in fp.fixed.faces_of_dim(n):
            sigma = _rho_condition(dev, member.g, upper, cell)
            if sigma is None or sigma not in cols:
                continue
            if cell in sing:
                clean = False
                continue
            entries[(rows[cell], cols[sigma])] = 1
        mats.append(IntMatrix(len(rows), len(cols), entries))
    return RhoMatrices(member.g, member.omega, mats, clean)
