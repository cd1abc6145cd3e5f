"""Exact computations with Leibniz algebras over the rationals.

The nilpotent family L4(n) and its classified solvable extensions can be
built, checked and analyzed with the functions re-exported here.
"""
from .algebra import (
    AlgebraTable,
    Subspace,
    basis_vector,
    bracket,
    left_mult_operator,
    parse_table,
    right_mult_operator,
    serialize_table,
    subspace_product,
)
from .catalog import build, build_L4, enumerate_families, fingerprint
from .derivations import (
    NilDependenceVerdict,
    NilKind,
    all_combinations_nilpotent,
    derivation_space,
    inner_derivations,
    pair_nil_independent,
    trace_power_polys,
)
from .extensions import (
    BasisChange,
    ExtensionData,
    apply_basis_change,
    assemble,
    check_left_conditions,
    check_right_conditions,
    verify_nilradical,
    verify_transformation,
)
from .identity import (
    center,
    check_left_leibniz,
    check_mult_homomorphisms,
    check_right_leibniz,
    is_associative,
    is_derivation,
    is_lie,
    quotient_is_lie,
    squares_ideal,
)
from .ratmat import Matrix, UniPoly, charpoly, is_nilpotent_matrix, nullspace, rref
from .series import derived_series, is_nilpotent, is_quasi_filiform, is_solvable, lower_central_series

__version__ = "0.1.0"
