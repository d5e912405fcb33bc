"""Normal structure: O_p, O^p, Fitting subgroup, minimal normal subgroups, the
p-layer of the socle, and quotients realized as coset actions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError, PreconditionError
from .classes import class_labels, class_representatives
from .group import PermGroup
from .perm import Permutation
from .subgroups import (
    DEFAULT_LATTICE_BOUND,
    as_indices,
    frattini_idx,
    generators_of,
    is_abelian_idx,
    is_normal_idx,
    mask_of,
    normal_closure_idx,
    p_part,
    power_idx,
    right_transversal,
    sylow_idx,
)


def _check_prime(p: int):
    if p < 2 or any(p % r == 0 for r in range(2, int(p ** 0.5) + 1)):
        raise DomainError(f"{p} is not prime")


def _union_of_classes_inside(G: PermGroup, idx) -> np.ndarray:
    """Elements whose whole conjugacy class lies in ``idx``: the intersection of
    all G-conjugates of the subset."""
    labels = class_labels(G)
    nclass = labels.max() + 1
    sizes = np.bincount(labels, minlength=nclass)
    inside = np.bincount(labels[np.asarray(idx, dtype=np.int64)], minlength=nclass) == sizes
    return np.flatnonzero(inside[labels])


def core_p_idx(G: PermGroup, p: int) -> np.ndarray:
    key = ("core_p", p)
    if key not in G.memo:
        G.memo[key] = _union_of_classes_inside(G, sylow_idx(G, p))
    return G.memo[key]


def core_p(G: PermGroup, p: int) -> PermGroup:
    """O_p(G): the intersection of the conjugates of a Sylow p-subgroup."""
    _check_prime(p)
    return G.subgroup_from_indices(core_p_idx(G, p), name=f"O_{p}")


def o_p_residual_idx(G: PermGroup, p: int) -> np.ndarray:
    """O^p(G) as the normal closure of the p'-parts of the class representatives."""
    reps = class_representatives(G)
    orders = G.element_orders[reps]
    seeds = []
    for r, o in zip(reps, orders):
        o = int(o)
        pp = p_part(o, p)
        m = o // pp
        if m == 1:
            continue
        # x^(pp * u) with pp * u == 1 mod m is the p'-part of x
        u = pow(pp, -1, m)
        seeds.append(int(power_idx(G, np.array([r]), pp * u)[0]))
    return normal_closure_idx(G, seeds)


def o_p_residual(G: PermGroup, p: int) -> PermGroup:
    """O^p(G): the smallest normal subgroup with p-group quotient."""
    _check_prime(p)
    return G.subgroup_from_indices(o_p_residual_idx(G, p), name=f"O^{p}")


def minimal_normal_idx(G: PermGroup) -> list[np.ndarray]:
    if "minimal_normals" in G.memo:
        return G.memo["minimal_normals"]
    closures = {}
    for r in class_representatives(G)[1:]:
        N = normal_closure_idx(G, [int(r)])
        closures[N.tobytes()] = N
    cands = sorted(closures.values(), key=lambda N: (N.size, N.tolist()))
    out = []
    for N in cands:
        nm = mask_of(G, N)
        if any(M.size < N.size and nm[M].all() for M in cands):
            continue
        out.append(N)
    G.memo["minimal_normals"] = out
    return out


def minimal_normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """Inclusion-minimal normal closures of single class representatives."""
    return [G.subgroup_from_indices(N, name="minimal normal") for N in minimal_normal_idx(G)]


def _prime_divisors(n: int) -> list[int]:
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


def fitting_idx(G: PermGroup) -> np.ndarray:
    gens = []
    for r in _prime_divisors(G.order):
        gens.extend(core_p_idx(G, r).tolist())
    return G.closure(gens) if gens else np.array([0])


def fitting(G: PermGroup) -> PermGroup:
    """F(G), the product of the O_r(G) over the primes r dividing |G|."""
    return G.subgroup_from_indices(fitting_idx(G), name="Fitting")


def _is_abelian_set(G: PermGroup, idx) -> bool:
    return is_abelian_idx(G, generators_of(G, idx))


def simple_factors_idx(G: PermGroup, N) -> list[np.ndarray]:
    """Simple direct factors of a nonabelian minimal normal subgroup ``N``,
    found as the minimal normal subgroups of ``N`` itself."""
    N = np.asarray(N, dtype=np.int64)
    H = G.subgroup_from_indices(N)
    return [G.member_indices(H.subgroup_from_indices(M)) for M in minimal_normal_idx(H)]


@dataclass
class NormalStructure:
    """Summary of the normal structure of a group relative to a prime."""

    o_p_order: int
    frattini_order: int
    minimal_normals: list = field(default_factory=list)
    simple_factors: list = field(default_factory=list)


def normal_structure(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> NormalStructure:
    _check_prime(p)
    mins = minimal_normal_idx(G)
    factors = []
    for N in mins:
        if _is_abelian_set(G, N):
            continue
        for S in simple_factors_idx(G, N):
            factors.append((G.subgroup_from_indices(S, name="simple factor"), int(S.size),
                            S.size % p == 0))
    return NormalStructure(
        o_p_order=int(core_p_idx(G, p).size),
        frattini_order=int(frattini_idx(G, bound).size),
        minimal_normals=[G.subgroup_from_indices(N, name="minimal normal") for N in mins],
        simple_factors=factors,
    )


def layer_X_idx(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> np.ndarray:
    failing = []
    if core_p_idx(G, p).size > 1:
        failing.append("O_p(G) = 1")
    if frattini_idx(G, bound).size > 1:
        failing.append("Phi(G) = 1")
    if failing:
        raise PreconditionError("layer_X needs " + " and ".join(failing), failing=tuple(failing))
    gens: list[int] = []
    for N in minimal_normal_idx(G):
        if _is_abelian_set(G, N):
            continue
        for S in simple_factors_idx(G, N):
            if S.size % p == 0:
                gens.extend(S.tolist())
    return G.closure(gens) if gens else np.array([0])


def layer_X(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> PermGroup:
    """Product of the nonabelian simple socle factors whose order is divisible by ``p``.

    Requires O_p(G) = 1 and Phi(G) = 1; then the generalized Fitting subgroup is
    the socle and this is the product of the components of order divisible by p.
    """
    _check_prime(p)
    return G.subgroup_from_indices(layer_X_idx(G, p, bound), name="X")


# -- quotients ---------------------------------------------------------------------------


def coset_action(G: PermGroup, H) -> tuple[PermGroup, np.ndarray]:
    """Action of ``G`` on the right cosets of ``H`` by right multiplication.

    Returns the image group (on ``[G:H]`` points, cosets numbered by their least
    element) and the coset number of every element of ``G``.
    """
    H_idx = as_indices(G, H)
    reps = right_transversal(G, H_idx)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    for c, r in enumerate(reps):
        coset_of[G.mul_idx(H_idx, r)] = c
    gens = []
    for g in G.generator_indices():
        gens.append(Permutation(coset_of[G.mul_idx(reps, g)]))
    image = PermGroup(gens, degree=len(reps), name="coset action")
    return image, coset_of


def quotient(G: PermGroup, N) -> PermGroup:
    """G/N realized as the permutation action on the right cosets of a normal subgroup."""
    N_idx = as_indices(G, N)
    if not is_normal_idx(G, N_idx):
        raise DomainError("quotient requires a normal subgroup")
    image, _ = coset_action(G, N_idx)
    return image


def is_normal_subgroup(G: PermGroup, H) -> bool:
    return is_normal_idx(G, as_indices(G, H))


def is_p_solvable(G: PermGroup, p: int) -> bool:
    """Whether every composition factor of ``G`` is a p-group or a p'-group.

    Walks down a chief series: a nonabelian minimal normal subgroup ``T^k`` is
    acceptable only if ``p`` does not divide ``|T|``; then recurse on the quotient.
    """
    _check_prime(p)
    key = ("p_solvable", p)
    if key in G.memo:
        return G.memo[key]
    H = G
    result = True
    while H.order > 1:
        N = minimal_normal_idx(H)[0]
        if not _is_abelian_set(H, N):
            T = simple_factors_idx(H, N)[0]
            if T.size % p == 0:
                result = False
                break
        if N.size == H.order:
            break
        H = quotient(H, N)
    G.memo[key] = result
    return result


def fstar_is_p_prime(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> bool | None:
    """Whether the generalized Fitting subgroup F*(G) is a p'-group, when decidable here.

    Decided in two situations: G p-solvable (then F*(G) is a p'-group exactly
    when O_p(G) = 1), and O_p(G) = Phi(G) = 1 (then F*(G) is the socle).
    Returns None otherwise.
    """
    if core_p_idx(G, p).size > 1:
        return False
    if is_p_solvable(G, p):
        return True
    if frattini_idx(G, bound).size == 1:
        return all(N.size % p for N in minimal_normal_idx(G))
    return None
