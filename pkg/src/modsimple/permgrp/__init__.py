"""Permutation groups: stabilizer chains, classes, subgroups and normal structure."""

from .classes import ClassInfo, class_labels, class_representatives, conjugacy_classes, p_regular_class_count
from .group import PermGroup, group_from_generators
from .perm import Permutation, format_group_text, parse_cycles, parse_group_text
from .structure import (
    NormalStructure,
    core_p,
    coset_action,
    fitting,
    is_normal_subgroup,
    layer_X,
    minimal_normal_subgroups,
    normal_structure,
    o_p_residual,
    quotient,
)
from .subgroups import (
    DEFAULT_LATTICE_BOUND,
    SubgroupLattice,
    centralizer,
    frattini,
    is_normal,
    max_abelian_p_order,
    maximal_abelian_p_orders,
    normalizer,
    p_part,
    subgroup_lattice,
    sylow,
)

__all__ = [
    "ClassInfo",
    "DEFAULT_LATTICE_BOUND",
    "NormalStructure",
    "PermGroup",
    "Permutation",
    "SubgroupLattice",
    "centralizer",
    "class_labels",
    "class_representatives",
    "conjugacy_classes",
    "core_p",
    "coset_action",
    "fitting",
    "format_group_text",
    "frattini",
    "group_from_generators",
    "is_normal",
    "is_normal_subgroup",
    "layer_X",
    "max_abelian_p_order",
    "maximal_abelian_p_orders",
    "minimal_normal_subgroups",
    "normal_structure",
    "normalizer",
    "o_p_residual",
    "p_part",
    "p_regular_class_count",
    "parse_cycles",
    "parse_group_text",
    "quotient",
    "subgroup_lattice",
    "sylow",
]
