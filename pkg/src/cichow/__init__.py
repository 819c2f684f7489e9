"""Exact intersection-theoretic computations for moduli of smooth
complete intersections: relation ideals of Chow rings via torus
localization, integral Picard groups via lattice normal forms, and
closed-form codimension-two ring verdicts.  All arithmetic is exact
rational."""

from .codim2 import (
    ChowVerdict,
    Codim2Coeffs,
    DetVerdict,
    c_db,
    chow_codim2,
    coeffs_closed_form,
    det_imp,
    det_simple,
    relation_cod2,
)
from .flagloc import fixed_points, pushforward_flag, pushforward_fl_r2, tangent_euler
from .gradedring import (
    GradedPresentation,
    hilbert_function,
    reduces_to_zero,
    ring_pattern,
)
from .picard import (
    AbelianGroup,
    f_vector_closed_form,
    f_vector_sum_form,
    localization_identity_check,
    n_ddd,
    pic_pgl,
    pic_sl,
)
from .poly import QQ, MPoly, RatFun, VarRegistry
from .relgen import (
    Engine,
    Profile,
    make_profile,
    monomial_basis_P,
    pure_pushforward,
    relation_generators,
)
from .schubert import grassmann_integral, pieri_multiply, vanishing_range_check
from .symfun import elementary_symmetric, is_block_symmetric, rewrite_in_elementary

__version__ = "1.0.0"
__all__ = [
    "AbelianGroup",
    "ChowVerdict",
    "Codim2Coeffs",
    "DetVerdict",
    "Engine",
    "GradedPresentation",
    "MPoly",
    "Profile",
    "QQ",
    "RatFun",
    "VarRegistry",
    "c_db",
    "chow_codim2",
    "coeffs_closed_form",
    "det_imp",
    "det_simple",
    "elementary_symmetric",
    "f_vector_closed_form",
    "f_vector_sum_form",
    "fixed_points",
    "grassmann_integral",
    "hilbert_function",
    "is_block_symmetric",
    "localization_identity_check",
    "make_profile",
    "monomial_basis_P",
    "n_ddd",
    "pic_pgl",
    "pic_sl",
    "pieri_multiply",
    "pure_pushforward",
    "pushforward_fl_r2",
    "pushforward_flag",
    "reduces_to_zero",
    "relation_cod2",
    "relation_generators",
    "rewrite_in_elementary",
    "ring_pattern",
    "tangent_euler",
    "vanishing_range_check",
]
