"""Invariants of fusion rings and abelian normalizable hypergroups.

Structure-constant tensors in, full invariant suite out: character tables,
formal codegrees, dual hypergroups, Burnside and dual-Burnside verdicts,
grouplike groups, adjoint subrings, universal gradings, nilpotency classes,
Galois orbits, and modular-categorification exclusion certificates.
"""

from .core import (
    Element,
    FlagSet,
    FusionData,
    basis_element,
    multiply,
    normalize,
    orders,
    rescale,
    tau_pairing,
    validate,
)
from .errors import HypergroupError
from .spectra import (
    CharacterTable,
    Tolerance,
    character_table,
    formal_codegrees,
    fp_character,
    integral_element,
    order,
    snap,
    verify_integer_fpdim,
)
from .dual import (
    DualData,
    DualFlags,
    double_dual_check,
    dual_codegrees,
    dual_flags,
    dual_hypergroup,
)
from .burnside import (
    BurnsideReport,
    burnside_report,
    grouplike_characters,
    grouplike_elements,
    is_burnside,
    is_dual_burnside,
    product_P,
    sgn_values,
    vanishing_elements,
)
from .structure import (
    CentralSeries,
    GradingResult,
    SubHypergroup,
    adjoint,
    central_series,
    commutator_sub,
    generated_sub,
    is_nilpotent,
    kernel_of_character,
    kernel_of_element,
    perp,
    quotient,
    support,
    universal_grading,
)
from .galois import OrbitPartition, check_codegree_conjugation, galois_orbits, weak_integrality
from .criteria import (
    ExclusionVerdict,
    burnside_exclusion,
    divisibility_test,
    frobenius_test,
    modular_prime_support,
    near_group_modular_test,
    squarefree_factor_test,
)
from . import builders

__version__ = "0.1.0"

__all__ = [
    "Element",
    "FlagSet",
    "FusionData",
    "basis_element",
    "multiply",
    "normalize",
    "orders",
    "rescale",
    "tau_pairing",
    "validate",
    "HypergroupError",
    "CharacterTable",
    "Tolerance",
    "character_table",
    "formal_codegrees",
    "fp_character",
    "integral_element",
    "order",
    "snap",
    "verify_integer_fpdim",
    "DualData",
    "DualFlags",
    "double_dual_check",
    "dual_codegrees",
    "dual_flags",
    "dual_hypergroup",
    "BurnsideReport",
    "burnside_report",
    "grouplike_characters",
    "grouplike_elements",
    "is_burnside",
    "is_dual_burnside",
    "product_P",
    "sgn_values",
    "vanishing_elements",
    "CentralSeries",
    "GradingResult",
    "SubHypergroup",
    "adjoint",
    "central_series",
    "commutator_sub",
    "generated_sub",
    "is_nilpotent",
    "kernel_of_character",
    "kernel_of_element",
    "perp",
    "quotient",
    "support",
    "universal_grading",
    "OrbitPartition",
    "check_codegree_conjugation",
    "galois_orbits",
    "weak_integrality",
    "ExclusionVerdict",
    "burnside_exclusion",
    "divisibility_test",
    "frobenius_test",
    "modular_prime_support",
    "near_group_modular_test",
    "squarefree_factor_test",
    "builders",
    "__version__",
]
