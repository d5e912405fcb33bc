"""Structural lower bounds for the largest simple-module dimension and their
machine verification."""

from .bounds import (
    LayerData,
    bound_part_i,
    bound_part_ii,
    check_hypotheses,
    is_mersenne,
    layer_data,
    max_abelian_p_subgroup_order,
    out_p_part,
    prime_class,
)
from .glnq import count_regular_orbits, gl_order, matrix_group_order, orbit_counts, sylow_glnq
from .report import FAIL, PASS, UNVERIFIED, AnalysisReport, Verdict, verify_theorem1

__all__ = [
    "AnalysisReport",
    "FAIL",
    "LayerData",
    "PASS",
    "UNVERIFIED",
    "Verdict",
    "bound_part_i",
    "bound_part_ii",
    "check_hypotheses",
    "count_regular_orbits",
    "gl_order",
    "is_mersenne",
    "layer_data",
    "matrix_group_order",
    "max_abelian_p_subgroup_order",
    "orbit_counts",
    "out_p_part",
    "prime_class",
    "sylow_glnq",
    "verify_theorem1",
]
