"""Exact computation with braid group representations, parallel cabling,
and their infinitesimal counterparts."""

from .braids import (
    BraidWord,
    artin_action_is_trivial,
    bigelow_element,
    cable_word,
    exponent_sum,
    linking_numbers,
    pure_braid_generator,
    underlying_permutation,
)
from .decompose import (
    CabledBasis,
    DecompositionReport,
    KernelVerdict,
    build_theorem_rhs,
    check_series_linearization,
    commutant_dimension,
    determinant_consistency,
    kernel_equivalence_check,
    verify_global_decomposition,
    verify_infinitesimal_decomposition,
)
from .infinitesimal import (
    InfRep,
    check_infinitesimal_relations,
    inf_burau,
    inf_cable_pullback,
    inf_scale,
    inf_shift,
    inf_sym,
)
from .laurent import LaurentPoly
from .matrix import (
    ExactMatrix,
    SingularMatrixError,
    matrix_determinant,
    matrix_from_json,
    matrix_inverse,
    solve_intertwiner_space,
)
from .ratfunc import RatFunc
from .reps import GeneratorRep, burau_rep, direct_sum, eval_word, frame, sym_rep, twist
from .series import TruncSeries, series_exp

__all__ = [
    "BraidWord",
    "CabledBasis",
    "DecompositionReport",
    "ExactMatrix",
    "GeneratorRep",
    "InfRep",
    "KernelVerdict",
    "LaurentPoly",
    "RatFunc",
    "SingularMatrixError",
    "TruncSeries",
    "artin_action_is_trivial",
    "bigelow_element",
    "build_theorem_rhs",
    "burau_rep",
    "cable_word",
    "check_infinitesimal_relations",
    "check_series_linearization",
    "commutant_dimension",
    "determinant_consistency",
    "direct_sum",
    "eval_word",
    "exponent_sum",
    "frame",
    "inf_burau",
    "inf_cable_pullback",
    "inf_scale",
    "inf_shift",
    "inf_sym",
    "kernel_equivalence_check",
    "linking_numbers",
    "matrix_determinant",
    "matrix_from_json",
    "matrix_inverse",
    "pure_braid_generator",
    "series_exp",
    "solve_intertwiner_space",
    "sym_rep",
    "twist",
    "underlying_permutation",
    "verify_global_decomposition",
    "verify_infinitesimal_decomposition",
]
