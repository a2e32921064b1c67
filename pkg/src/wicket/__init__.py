"""Pseudo-Anosov dilatations and presentations for wicket and Hilden braids."""

from .artin import FreeAutomorphism, FreeWord, ResourceLimitError, artin_automorphism, braids_equal
from .braid import (
    BraidError,
    BraidWord,
    Permutation,
    closure_components,
    compose,
    exponent_sum,
    family_word,
    free_reduce,
    full_twist_power,
    half_twist,
    hilden_generator,
    inverse,
    pairing_preserved,
    parse_word,
    permutation,
    wicket_generator,
)
from .dilatation import (
    DilatationResult,
    convergence_report,
    dilatation,
    family_polynomial,
    kappa,
    penner_check,
    reproduce_table,
)
from .linalg import IntPoly, RootBracket, char_poly, is_primitive, largest_real_root, smith_normal_form
from .presentation import Presentation, abelianization, handlebody_presentation, verify_relations
from .traintrack import (
    ProngData,
    family_incidence_matrix,
    prong_data,
    validate_family,
    w6_incidence_matrix,
)

__version__ = "0.1.0"
