"""Exact computation of Bredon and virtual cohomological dimensions at finite scale."""

__version__ = "0.1.0"

from .errors import BredonError
from .poset import FinitePoset, build_poset, chains, order_complex, upper_set
from .scomplex import (
    ComplexPair,
    SimplicialComplex,
    barycentric_subdivision,
    cone,
    from_maximal_faces,
    link,
    make_pair,
)
from .linalg import IntMatrix, SmithForm, smith_normal_form
from .zcohomology import (
    CochainComplexZ,
    CohomologyGroup,
    cohomology,
    reduced_cohomology,
    relative_cochain_complex,
)
from .coxeter import (
    CoxeterMatrix,
    cd_building_formula,
    graph_product_to_coxeter,
    is_finite_type,
    nerve,
    spherical_poset,
    vcd_link_formula,
)
from .pgroup import PermGroup, conjugate, enumerate_group, left_cosets, largest_in_coset, subgroup_equal, subgroup_le

__all__ = [
    "__version__", "BredonError",
    "FinitePoset", "build_poset", "chains", "order_complex", "upper_set",
    "ComplexPair", "SimplicialComplex", "barycentric_subdivision", "cone", "from_maximal_faces", "link", "make_pair",
    "IntMatrix", "SmithForm", "smith_normal_form",
    "CochainComplexZ", "CohomologyGroup", "cohomology", "reduced_cohomology", "relative_cochain_complex",
    "CoxeterMatrix", "cd_building_formula", "graph_product_to_coxeter", "is_finite_type", "nerve",
    "spherical_poset", "vcd_link_formula",
    "PermGroup", "conjugate", "enumerate_group", "left_cosets", "largest_in_coset", "subgroup_equal", "subgroup_le",
]
