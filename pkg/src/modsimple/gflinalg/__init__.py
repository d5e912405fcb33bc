"""Exact arithmetic over finite fields: scalars, polynomials and dense matrices."""

from .field import GF, is_prime, prime_power
from .matrix import (
    FqMatrix,
    SpinScript,
    apply_script,
    charpoly,
    echelon_basis,
    identity,
    inverse,
    left_nullspace,
    nullspace,
    rank,
    reduce_rows,
    rref,
    spin,
    spin_script,
)
from .poly import is_irreducible, poly_factor, small_irreducible_factors

FieldSpec = GF

__all__ = [
    "GF", "FieldSpec", "FqMatrix", "SpinScript", "apply_script", "charpoly",
    "echelon_basis", "identity", "inverse", "is_irreducible", "is_prime",
    "left_nullspace", "nullspace", "poly_factor", "prime_power", "rank",
    "reduce_rows", "rref", "small_irreducible_factors", "spin", "spin_script",
]
