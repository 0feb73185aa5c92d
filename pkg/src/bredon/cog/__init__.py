"""Simple complexes of finite groups, their developments, and the checks run on them."""

from .bredon import bredon_basis, bredon_cochain_complex
from .complexes import (
    ABSTRACT,
    FINITE,
    ClassReport,
    SimpleComplexOfGroups,
    ValidationReport,
    abstract_complex,
    cd_from_omega,
    finite_complex,
    k_pair,
    omega_partition,
    validate,
)
from .development import (
    Development,
    FixedPair,
    LMember,
    LSet,
    develop,
    fixed_pair,
    l_set,
    rho,
    rho_matrices,
)
from .verify import (
    DegreeRow,
    Verdict,
    check_acyclicity,
    lemma34_check,
    stabilizer_admissible,
    verify_bredon,
    verify_decomposition,
)

__all__ = [
    "ABSTRACT", "FINITE", "ClassReport", "DegreeRow", "Development", "FixedPair",
    "LMember", "LSet", "SimpleComplexOfGroups", "ValidationReport", "Verdict",
    "abstract_complex", "bredon_basis", "bredon_cochain_complex", "cd_from_omega",
    "check_acyclicity", "develop", "finite_complex", "fixed_pair", "k_pair", "l_set",
    "lemma34_check", "omega_partition", "rho", "rho_matrices", "stabilizer_admissible",
    "validate", "verify_bredon", "verify_decomposition",
]
