"""Exact Cayley unitary elements in rational group algebras.

The package builds finite groups as multiplication tables, does exact
rational arithmetic in their group algebras, and constructs unitary
elements u = (1 - beta) * (1 + beta)^-1 from skew-symmetric beta, both
through closed-form coefficients and through an independent exact
linear-algebra oracle.
"""

from .algebra import (
    AlgebraElement,
    GroupMismatchError,
    SkewGenerator,
    element_from_json,
    element_to_json,
    format_element,
    involute,
    involute_classical,
    involute_oriented,
    is_skew,
    is_unitary,
    materialize,
    oracle_inverse,
    regular_representation,
    skew_basis,
    solve_linear,
)
from .cayley import (
    CayleyResult,
    WrongKindError,
    cayley_from_difference,
    cayley_from_generator,
    cayley_from_self_inverse,
    cayley_from_sum,
    cayley_preimage_of_odd_element,
    cayley_transform,
    inverse_of_one_plus,
    is_cayley_unit,
    is_product_of_two_cayley,
    s3_factorization_identity,
)
from .groups import (
    FiniteGroup,
    InconsistentOrientationError,
    Orientation,
    TrivialOrientationError,
    cyclic,
    dihedral4,
    load_group_table,
    orientation_from_generators,
    quaternion8,
    symmetric3,
)
from .parsing import ElementSyntaxError, UnknownGeneratorError, parse_element
from .sequences import (
    companion_sequence,
    fibonacci,
    fibonacci_like,
    fibonacci_like_closed,
    inverse_coeff_sum_closed,
    inverse_coeffs_difference,
    inverse_coeffs_fibonacci,
    inverse_coeffs_sum,
    unit_coeffs_difference,
    unit_coeffs_sum,
)

__all__ = [
    "AlgebraElement",
    "CayleyResult",
    "ElementSyntaxError",
    "FiniteGroup",
    "GroupMismatchError",
    "InconsistentOrientationError",
    "Orientation",
    "SkewGenerator",
    "TrivialOrientationError",
    "UnknownGeneratorError",
    "WrongKindError",
    "cayley_from_difference",
    "cayley_from_generator",
    "cayley_from_self_inverse",
    "cayley_from_sum",
    "cayley_preimage_of_odd_element",
    "cayley_transform",
    "companion_sequence",
    "cyclic",
    "dihedral4",
    "element_from_json",
    "element_to_json",
    "fibonacci",
    "fibonacci_like",
    "fibonacci_like_closed",
    "format_element",
    "inverse_coeff_sum_closed",
    "inverse_coeffs_difference",
    "inverse_coeffs_fibonacci",
    "inverse_coeffs_sum",
    "inverse_of_one_plus",
    "involute",
    "involute_classical",
    "involute_oriented",
    "is_cayley_unit",
    "is_product_of_two_cayley",
    "is_skew",
    "is_unitary",
    "load_group_table",
    "materialize",
    "oracle_inverse",
    "orientation_from_generators",
    "parse_element",
    "quaternion8",
    "regular_representation",
    "s3_factorization_identity",
    "skew_basis",
    "solve_linear",
    "symmetric3",
    "unit_coeffs_difference",
    "unit_coeffs_sum",
]
