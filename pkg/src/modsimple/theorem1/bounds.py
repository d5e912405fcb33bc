"""Lower bounds for the largest simple-module dimension from the p-local and
component structure of a group with O_p(G) = Phi(G) = 1."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, PreconditionError
from ..gflinalg.field import is_prime
from ..permgrp.group import PermGroup
from ..permgrp.structure import core_p_idx, layer_X_idx
from ..permgrp.subgroups import (
    DEFAULT_LATTICE_BOUND,
    centralizer_idx,
    frattini_idx,
    generators_of,
    is_abelian_idx,
    max_abelian_p_order,
    p_part,
    subgroups_of_pgroup,
    sylow_idx,
)


def is_mersenne(p: int) -> bool:
    """True for odd primes p with p + 1 a power of 2."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p > 2 and (p + 1) & p == 0


def prime_class(p: int) -> str:
    """'two', 'mersenne' or 'generic'."""
    if p == 2:
        return "two"
    return "mersenne" if is_mersenne(p) else "generic"


def check_hypotheses(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND):
    failing = []
    if core_p_idx(G, p).size > 1:
        failing.append("O_p(G) = 1")
    if frattini_idx(G, bound).size > 1:
        failing.append("Phi(G) = 1")
    if failing:
        raise PreconditionError("hypotheses fail: " + ", ".join(failing), failing=tuple(failing))


@dataclass(frozen=True)
class LayerData:
    """X, its centralizer C and the product XC, as element-index arrays of G."""

    X: np.ndarray
    C: np.ndarray
    XC: np.ndarray


def layer_data(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> LayerData:
    key = ("layer_data", p, bound)
    if key in G.memo:
        return G.memo[key]
    check_hypotheses(G, p, bound)
    X = layer_X_idx(G, p, bound)
    C = centralizer_idx(G, generators_of(G, X))
    XC = G.closure(np.concatenate([generators_of(G, X), generators_of(G, C)]))
    data = LayerData(X, C, XC)
    G.memo[key] = data
    return data


def out_p_part(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> int:
    """|Out_G(X)|_p where Out_G(X) = G / X C_G(X)."""
    d = layer_data(G, p, bound)
    return p_part(G.order // int(d.XC.size), p)


def bound_part_i(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> int:
    """|G|_p / |Out_G(X)|_p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p_part(G.order, p) // out_p_part(G, p, bound)


def _max_order_abelian(G: PermGroup, idx, p: int) -> list[np.ndarray]:
    """All abelian p-subgroups of largest order inside one Sylow p-subgroup of the
    subgroup ``idx`` of G (as element indices of G)."""
    H = G.subgroup_from_indices(idx)
    P = sylow_idx(H, p)
    best = []
    best_order = 0
    for K, gens in subgroups_of_pgroup(H, P, p):
        if not is_abelian_idx(H, gens):
            continue
        if K.size > best_order:
            best, best_order = [K], K.size
        elif K.size == best_order:
            best.append(K)
    return [G.indices_of(H.elements[K]) for K in best]


def bound_part_ii(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> int:
    """Largest |A| over maximal abelian p-subgroups A of X C_G(X) that contain an
    abelian p-subgroup B of C_G(X) of maximal order.

    Every such B is C_G(X)-conjugate to one inside a fixed Sylow subgroup of
    C_G(X), so B ranges over the maximal-order abelian subgroups of that Sylow
    subgroup and A over subgroups of X C_G(X) containing a conjugate of B.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if prime_class(p) == "generic":
        raise PreconditionError("the second bound applies to p = 2 and Mersenne primes",
                                failing=("p = 2 or Mersenne",))
    d = layer_data(G, p, bound)
    XC = G.subgroup_from_indices(d.XC)
    best = 0
    for B in _max_order_abelian(G, d.C, p):
        best = max(best, max_abelian_p_order(XC, p, must_contain=G.subgroup_from_indices(B)))
    return best


def max_abelian_p_subgroup_order(G: PermGroup, p: int) -> int:
    return max_abelian_p_order(G, p)
