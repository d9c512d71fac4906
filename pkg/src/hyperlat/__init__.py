"""Higher-root lattices of SU(3) quantum modules.

Exact construction of the fusion matrices, the ribbon of higher roots,
Gram matrices and lattice invariants for the module families A, D and
the three exceptional cases, with theta-series enumeration and golden
verification against the published tables.
"""

from .catalog import (
    BUNDLED,
    DATA_DIR_ENV,
    ModuleError,
    ModuleParseError,
    QuantumModule,
    get_module,
    load_module_file,
    supported_modules,
    validate_module,
)
from .folding import ExtendedFusion, fold
from .fusion import FusionError, FusionTable, alcove, build_alcove_fusion, triality
from .lattice import (
    LatticeInvariants,
    congruent_up_to_signed_permutation,
    determinant,
    exact_rank,
    find_signed_permutation,
    invariants,
    is_even,
    is_positive_definite,
    lll_reduce_gram,
    modular_level,
    rational_inverse,
    smith_normal_form,
)
from .numth import (
    CharacterMatchError,
    DirichletCharacter,
    all_characters,
    euler_phi,
    legendre,
    matching_characters,
    unit_group,
)
from .ribbon import BASIS_POSITIONS, RibbonPoint, RootSystem, position_triality
from .theta import (
    ShellReport,
    ThetaSeries,
    jacobi_theta_combination,
    kissing_term,
    roots_are_shell,
    shell_vectors,
    theta_coefficients,
)
from .verify import CheckResult, run_suite

__all__ = [
    "BASIS_POSITIONS",
    "BUNDLED",
    "CharacterMatchError",
    "CheckResult",
    "DATA_DIR_ENV",
    "DirichletCharacter",
    "ExtendedFusion",
    "FusionError",
    "FusionTable",
    "LatticeInvariants",
    "ModuleError",
    "ModuleParseError",
    "QuantumModule",
    "RibbonPoint",
    "RootSystem",
    "ShellReport",
    "ThetaSeries",
    "alcove",
    "all_characters",
    "build_alcove_fusion",
    "congruent_up_to_signed_permutation",
    "determinant",
    "euler_phi",
    "exact_rank",
    "find_signed_permutation",
    "fold",
    "get_module",
    "invariants",
    "is_even",
    "is_positive_definite",
    "jacobi_theta_combination",
    "kissing_term",
    "legendre",
    "lll_reduce_gram",
    "load_module_file",
    "matching_characters",
    "modular_level",
    "position_triality",
    "rational_inverse",
    "roots_are_shell",
    "run_suite",
    "shell_vectors",
    "smith_normal_form",
    "supported_modules",
    "theta_coefficients",
    "triality",
    "unit_group",
    "validate_module",
]

__version__ = "0.1.0"
