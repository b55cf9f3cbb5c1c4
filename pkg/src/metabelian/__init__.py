"""Exact computations with symmetric elements of free metabelian Lie algebras.

The library works over the rationals throughout: sparse exact polynomials,
canonical forms in the free metabelian Lie algebra, the faithful wreath
product embedding with a constructive inverse, and the invariant theory of
the permutation action, including a finite generating set of the invariant
module and an algorithm decomposing any invariant over it.
"""

from .errors import (
    AlgebraError,
    DimensionError,
    DomainError,
    InternalConsistencyError,
    InvarianceError,
    KernelError,
    MembershipError,
    ParseError,
    RankError,
    ResourceGuardError,
)
from .permutations import Permutation, enumerate_sn, parse_cycles, sn_generators
from .polynomials import (
    EDecomposition,
    Polynomial,
    Rational,
    decompose_in_elementary,
    elementary_symmetric,
    expand_e_monomial,
    is_symmetric,
    reynolds_poly,
    symmetry_violation,
)
from .lie import (
    Ad,
    BasisCommutator,
    Bracket,
    LieElement,
    LieExpr,
    Scale,
    Sum,
    Var,
    ad_action,
    apply_perm_lie,
    bracket,
    grade,
    normal_form,
)
from .wreath import (
    WreathElement,
    apply_perm_wreath,
    bracket_wreath,
    embed,
    in_commutator_image,
    membership_residual,
    preimage,
    substitute_u_equals_x,
)
from .invariants import (
    InvariantDecomposition,
    decompose_invariant,
    epsilon,
    generator_h,
    generator_h_lie,
    invariance_violation,
    invariant_space_basis,
    is_invariant_lie,
    polarized_elementary,
    reynolds_lie,
    solve_weighted_kernel,
    sum_of_variables,
    verify_module_relation,
)
from .parsing import parse_lie_expr, parse_polynomial, parse_wreath

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "DimensionError",
    "DomainError",
    "InternalConsistencyError",
    "InvarianceError",
    "KernelError",
    "MembershipError",
    "ParseError",
    "RankError",
    "ResourceGuardError",
    "Permutation",
    "enumerate_sn",
    "parse_cycles",
    "sn_generators",
    "EDecomposition",
    "Polynomial",
    "Rational",
    "decompose_in_elementary",
    "elementary_symmetric",
    "expand_e_monomial",
    "is_symmetric",
    "reynolds_poly",
    "symmetry_violation",
    "Ad",
    "BasisCommutator",
    "Bracket",
    "LieElement",
    "LieExpr",
    "Scale",
    "Sum",
    "Var",
    "ad_action",
    "apply_perm_lie",
    "bracket",
    "grade",
    "normal_form",
    "WreathElement",
    "apply_perm_wreath",
    "bracket_wreath",
    "embed",
    "in_commutator_image",
    "membership_residual",
    "preimage",
    "substitute_u_equals_x",
    "InvariantDecomposition",
    "decompose_invariant",
    "epsilon",
    "generator_h",
    "generator_h_lie",
    "invariance_violation",
    "invariant_space_basis",
    "is_invariant_lie",
    "polarized_elementary",
    "reynolds_lie",
    "solve_weighted_kernel",
    "sum_of_variables",
    "verify_module_relation",
    "parse_lie_expr",
    "parse_polynomial",
    "parse_wreath",
]
