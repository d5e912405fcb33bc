"""Complexes of p-subgroups, their reduced Euler characteristics and the
Steinberg virtual character.

Three G-posets of nontrivial p-subgroups are supported: all of them
(``poset``), the elementary abelian ones (``elementary_abelian``) and the
radical ones, ``U = O_p(N_G(U))`` (``bouc``).  Chains are enumerated up to
G-conjugacy by extending upward from the smallest member, fusing candidates
under the stabilizer of the chain built so far.

Sign convention: a chain with ``m`` subgroups has sign ``(-1)^m`` and the empty
chain contributes ``+1``.  With this convention the character value at the
identity is minus the reduced Euler characteristic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import CapabilityError, DomainError
from .gflinalg.field import is_prime
from .permgrp.classes import ClassInfo, class_counts, conjugacy_classes
from .permgrp.group import PermGroup
from .permgrp.structure import core_p_idx
from .permgrp.subgroups import (
    DEFAULT_LATTICE_BOUND,
    conjugates,
    generators_of,
    is_elementary_abelian_idx,
    key,
    normalizer_idx,
    normalizes,
    subgroups_of_pgroup,
    sylow_idx,
)

KINDS = ("poset", "elementary_abelian", "bouc")
_ALIASES = {"poset": "poset", "elementary_abelian": "elementary_abelian", "elab": "elementary_abelian",
            "bouc": "bouc", "radical": "bouc"}


def _kind(kind: str) -> str:
    try:
        return _ALIASES[kind]
    except KeyError:
        raise DomainError(f"unknown complex kind {kind!r}; expected one of {KINDS}") from None


@dataclass(frozen=True)
class ChainOrbit:
    """One G-orbit of chains; ``chain`` lists element-index arrays, smallest first."""

    chain: tuple
    m: int
    stabilizer_order: int
    orbit_size: int
    sign: int
    stabilizer: np.ndarray

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(int(H.size) for H in self.chain)

    def subgroups(self, G: PermGroup) -> list[PermGroup]:
        return [G.subgroup_from_indices(H) for H in self.chain]


@dataclass(frozen=True)
class VirtualCharacter:
    class_reps: tuple
    values: tuple

    def is_zero(self) -> bool:
        return not any(self.values)

    @property
    def identity_value(self) -> int:
        return self.values[0]

    def vanishes_on_p_singular(self, p: int) -> bool:
        return all(v == 0 for c, v in zip(self.class_reps, self.values) if c.element_order % p == 0)


def _check(G: PermGroup, p: int, bound: int):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    P = sylow_idx(G, p)
    if P.size > bound:
        raise CapabilityError(f"Sylow {p}-subgroup of order {P.size} exceeds the bound {bound}", bound=bound)
    return P


def _members(G: PermGroup, p: int, kind: str, bound: int):
    """Class representatives and all members of the chosen p-subgroup poset."""
    kind = _kind(kind)
    P = _check(G, p, bound)
    memo_key = ("p_subgroup_members", p, kind)
    if memo_key in G.memo:
        return G.memo[memo_key]
    reps = []
    members = []
    seen: dict[bytes, int] = {}  # every conjugate of a class already handled
    for H, gens in subgroups_of_pgroup(G, P, p):
        if H.size == 1 or key(H) in seen:
            continue
        conj = conjugates(G, H)
        for c in conj:
            seen[key(c)] = 1
        if kind == "elementary_abelian" and not is_elementary_abelian_idx(G, H, gens, p):
            continue
        if kind == "bouc":
            N = normalizer_idx(G, H)
            NG = G.subgroup_from_indices(N)
            if core_p_idx(NG, p).size != H.size:
                continue
        reps.append(H)
        members.append(conj)
    flat = []
    for cls, conj in enumerate(members):
        flat.extend((c, cls) for c in conj)
    out = (reps, flat)
    G.memo[memo_key] = out
    return out


def p_subgroup_classes(G: PermGroup, p: int, kind: str = "poset",
                       bound: int = DEFAULT_LATTICE_BOUND) -> list[PermGroup]:
    """Representatives of the G-classes of nontrivial p-subgroups in the chosen poset.

    Subgroups are enumerated inside one Sylow subgroup; each class is represented
    by its first member there in (order, element indices) order.
    """
    reps, _ = _members(G, p, kind, bound)
    return [G.subgroup_from_indices(H) for H in reps]


def chain_orbits(G: PermGroup, p: int, kind: str = "poset",
                 bound: int = DEFAULT_LATTICE_BOUND) -> list[ChainOrbit]:
    """Orbit representatives of all strictly increasing chains, the empty chain first."""
    kind = _kind(kind)
    _check(G, p, bound)
    memo_key = ("chain_orbits", p, kind)
    if memo_key in G.memo:
        return G.memo[memo_key]
    reps, flat = _members(G, p, kind, bound)
    n = G.order
    everything = np.arange(n)
    out = [ChainOrbit((), 0, n, 1, 1, everything)]
    if not flat:
        G.memo[memo_key] = out
        return out
    subs = [c for c, _ in flat]
    sizes = np.array([c.size for c in subs])
    index = {key(c): i for i, c in enumerate(subs)}
    masks = np.zeros((len(subs), n), dtype=bool)
    for i, c in enumerate(subs):
        masks[i, c] = True
    gens_of = {}

    def sub_gens(i):
        if i not in gens_of:
            gens_of[i] = generators_of(G, subs[i])
        return gens_of[i]

    def extend(chain: tuple, stab: np.ndarray, candidates: np.ndarray):
        """Record orbits of chains ``chain + (K,)`` for K among ``candidates``."""
        if candidates.size == 0:
            return
        stab_gens = generators_of(G, stab)
        parent = {int(c): int(c) for c in candidates}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s in stab_gens:
            for c in candidates:
                img = index[key(np.sort(G.conj_idx(subs[c], s)))]
                ra, rb = find(int(c)), find(img)
                if ra != rb:
                    lo, hi = sorted((ra, rb), key=lambda i: (subs[i].size, subs[i].tolist()))
                    parent[hi] = lo
        roots = sorted({find(int(c)) for c in candidates}, key=lambda i: (subs[i].size, subs[i].tolist()))
        for r in roots:
            K = subs[r]
            new_stab = stab[normalizes(G, sub_gens(r), masks[r], stab)]
            new_chain = chain + (r,)
            m = len(new_chain)
            out.append(ChainOrbit(tuple(subs[i] for i in new_chain), m, int(new_stab.size),
                                  n // int(new_stab.size), -1 if m % 2 else 1, new_stab))
            above = np.flatnonzero((sizes > K.size) & masks[:, K].all(axis=1))
            extend(new_chain, new_stab, above)

    extend((), everything, np.arange(len(subs)))
    G.memo[memo_key] = out
    return out


def reduced_euler_characteristic(G: PermGroup, p: int, kind: str = "poset",
                                 bound: int = DEFAULT_LATTICE_BOUND) -> int:
    """-1 + sum over nonempty chain orbits of (-1)^(m-1) [G : G_sigma]."""
    return -1 + sum((-1) ** (o.m - 1) * o.orbit_size for o in chain_orbits(G, p, kind, bound) if o.m)


def steinberg_character(G: PermGroup, p: int, kind: str = "poset",
                        bound: int = DEFAULT_LATTICE_BOUND) -> VirtualCharacter:
    """Alternating sum over chain orbits of the permutation characters on the
    cosets of the chain stabilizers.

    The number of cosets of ``H`` fixed by ``g`` is ``|C_G(g)| |g^G ∩ H| / |H|``.
    """
    classes = conjugacy_classes(G)
    values = [0] * len(classes)
    for o in chain_orbits(G, p, kind, bound):
        counts = class_counts(G, o.stabilizer)
        for j, c in enumerate(classes):
            if counts[j]:
                fixed = (G.order // c.size) * int(counts[j])
                values[j] += o.sign * (fixed // o.stabilizer_order)
    return VirtualCharacter(tuple(classes), tuple(int(v) for v in values))


def steinberg_nonzero(G: PermGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> bool:
    return not steinberg_character(G, p, "poset", bound).is_zero()


def chain_census_csv(orbits, kind: str) -> str:
    """One CSV row per chain orbit: kind, m, orders joined by '<', stabilizer order,
    orbit size, sign."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "m", "orders", "stabilizer_order", "orbit_size", "sign"])
    for o in orbits:
        w.writerow([_kind(kind), o.m, "<".join(str(x) for x in o.orders),
                    o.stabilizer_order, o.orbit_size, o.sign])
    return buf.getvalue()


__all__ = [
    "KINDS", "ChainOrbit", "ClassInfo", "VirtualCharacter", "chain_census_csv", "chain_orbits",
    "p_subgroup_classes", "reduced_euler_characteristic", "steinberg_character", "steinberg_nonzero",
]
