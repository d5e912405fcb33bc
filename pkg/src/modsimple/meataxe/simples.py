"""All simple modules of a permutation group in characteristic p.

The search works over the prime field only.  A GF(p)-simple of dimension ``d``
whose endomorphism algebra is GF(p^e) splits over the algebraic closure into
``e`` Galois-conjugate absolutely simple modules of dimension ``d/e``, so the
multiset of absolute dimensions is read off from the ``(d, e)`` pairs.  The list
is complete exactly when the ``e`` values add up to the number of p-regular
classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError, IncompleteError
from ..gflinalg.field import GF, is_prime
from ..permgrp.classes import conjugacy_classes
from ..permgrp.group import PermGroup
from ..permgrp.subgroups import p_part
from .chop import SimpleModule, chop_module
from .module import GModule, dual, perm_module, regular_module, tensor, trivial_module

MAX_TENSOR_DEPTH = 8
REGULAR_FALLBACK_ORDER = 1000


@dataclass
class SimpleCensus:
    """Outcome of the search for simple modules of ``G`` over GF(p)."""

    p: int
    target: int
    simples: list = field(default_factory=list)
    sources: list = field(default_factory=list)
    seed: int = 0

    @property
    def found(self) -> int:
        return sum(S.e for S in self.simples)

    @property
    def complete(self) -> bool:
        return self.found == self.target

    @property
    def dims(self) -> list[int]:
        out = []
        for S in self.simples:
            out.extend([S.abs_dim] * S.e)
        return sorted(out)

    def fingerprints(self) -> list[tuple]:
        return sorted(S.fingerprint for S in self.simples)


def _class_words(G: PermGroup, p: int):
    return [G.word(c.rep_index) for c in conjugacy_classes(G) if c.element_order % p]


def _fingerprint_fn(words):
    def fingerprint(S: SimpleModule) -> tuple:
        M = S.module
        traces = []
        for w in words:
            traces.append(_trace(M.field, M.matrix_of_word(w)))
        return (S.dim, S.e, tuple(traces))
    return fingerprint


def _trace(F: GF, A) -> int:
    t = 0
    for x in np.diag(A):
        t = int(F.add(t, int(x)))
    return t


def simple_census(G: PermGroup, p: int, seed: int = 0, max_depth: int = MAX_TENSOR_DEPTH,
                  regular_bound: int = REGULAR_FALLBACK_ORDER) -> SimpleCensus:
    """Find the simple GF(p)G-modules; see the module docstring.

    Sources, in order: the trivial module, the natural permutation module, duals
    of found simples, then tensor products of found simples (smallest products
    first) for up to ``max_depth`` rounds, and finally the regular module when
    ``|G| <= regular_bound``.  Raises :class:`IncompleteError` if the count of
    absolutely simple modules still falls short.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    key = ("simple_census", p, seed, max_depth, regular_bound)
    if key in G.memo:
        return G.memo[key]
    F = GF(p)
    words = _class_words(G, p)
    census = SimpleCensus(p=p, target=len(words), seed=seed)
    rng = np.random.default_rng(seed)
    fp = _fingerprint_fn(words)
    known = census.simples

    def absorb(M: GModule, label: str):
        before = len(known)
        chop_module(M, known, rng, fingerprint=fp)
        census.sources.append((label, M.dim, len(known) - before))
        return census.complete

    done = absorb(trivial_module(G, F), "trivial")
    if not done and G.degree > 1:
        done = absorb(perm_module(G, F), "natural permutation module")
    dualized: set[int] = set()
    tried: set[tuple[int, int]] = set()
    depth = 0
    while not done and depth < max_depth:
        depth += 1
        n_start = len(known)
        for i in range(len(known)):
            if done:
                break
            if i not in dualized:
                dualized.add(i)
                done = absorb(dual(known[i].module), f"dual of simple {i}")
        pairs = [(i, j) for i in range(len(known)) for j in range(i, len(known))
                 if (i, j) not in tried and known[i].dim > 1 and known[j].dim > 1]
        pairs.sort(key=lambda ij: (known[ij[0]].dim * known[ij[1]].dim, ij))
        for i, j in pairs:
            if done:
                break
            tried.add((i, j))
            done = absorb(tensor(known[i].module, known[j].module), f"tensor of simples {i} and {j}")
        if len(known) == n_start:
            # nothing new: later rounds would repeat the same products
            break
    if not done and G.order <= regular_bound:
        done = absorb(regular_module(G, F), "regular module")
    if not done:
        raise IncompleteError(
            f"found {census.found} of {census.target} absolutely simple modules for p = {p}")
    G.memo[key] = census
    return census


def all_absolutely_simple_dims(G: PermGroup, p: int, seed: int = 0) -> list[int]:
    """Sorted dimensions of the simple modules over an algebraic closure of GF(p)."""
    return simple_census(G, p, seed).dims


def m_s(G: PermGroup, p: int, seed: int = 0) -> int:
    """Largest dimension of an absolutely simple module in characteristic p."""
    return max(all_absolutely_simple_dims(G, p, seed))


def has_defect_zero_simple(G: PermGroup, p: int, seed: int = 0) -> bool:
    """True iff some absolutely simple dimension is divisible by |G|_p."""
    pp = p_part(G.order, p)
    return any(d % pp == 0 for d in all_absolutely_simple_dims(G, p, seed))


def absolutely_irreducible_count(G: PermGroup, p: int, seed: int = 0) -> int:
    return len(all_absolutely_simple_dims(G, p, seed))


def splitting_degree(G: PermGroup, p: int, seed: int = 0) -> int:
    """Least k such that every simple module is absolutely simple over GF(p^k)."""
    return math.lcm(1, *(S.e for S in simple_census(G, p, seed).simples))
