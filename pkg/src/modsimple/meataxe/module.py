"""Matrix representations of permutation groups over finite fields.

A :class:`GModule` stores one matrix per generator of its group, in the order
of ``group.generators``.  Vectors are rows and the group acts on the right, so
the matrix of ``g * h`` is ``M(g) @ M(h)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import MalformedInputError
from ..gflinalg import matrix as mx
from ..gflinalg.field import GF
from ..permgrp.group import PermGroup
from ..permgrp.perm import Permutation


@dataclass(eq=False)
class GModule:
    field: GF
    action: list
    group: PermGroup | None = None
    dim: int = -1

    def __post_init__(self):
        self.action = [np.asarray(a, dtype=np.int64) for a in self.action]
        if self.dim < 0:
            if not self.action:
                raise MalformedInputError("dimension is required when there are no generators")
            self.dim = self.action[0].shape[0]
        for a in self.action:
            if a.shape != (self.dim, self.dim):
                raise MalformedInputError(f"action matrix of shape {a.shape}, expected {self.dim}x{self.dim}")
        if self.group is not None and len(self.action) != len(self.group.generators):
            raise MalformedInputError("one action matrix per group generator is required")

    def __repr__(self):
        return f"GModule(dim={self.dim}, field={self.field!r}, gens={len(self.action)})"

    def matrix_of_word(self, word) -> np.ndarray:
        out = mx.identity(self.dim)
        for gi in word:
            out = self.field.matmul(out, self.action[gi])
        return out

    def matrix_of(self, element: int) -> np.ndarray:
        """Matrix of element number ``element`` of the group's element table."""
        return self.matrix_of_word(self.group.word(int(element)))

    def validate(self, words: int = 20, seed: int = 0, max_length: int = 12) -> bool:
        """Check invertibility and that random words evaluating to the identity
        permutation evaluate to the identity matrix (after raising to the
        permutation's order)."""
        F = self.field
        for a in self.action:
            if mx.rank(F, a) != self.dim:
                return False
        gens = self.group.generators if self.group is not None else ()
        if not gens:
            return True
        rng = np.random.default_rng(seed)
        eye = mx.identity(self.dim)
        for _ in range(words):
            word = rng.integers(0, len(gens), size=int(rng.integers(1, max_length + 1)))
            perm = Permutation.identity(self.group.degree)
            for gi in word:
                perm = perm * gens[gi]
            M = self.matrix_of_word(word)
            if not np.array_equal(_matrix_power(F, M, perm.order()), eye):
                return False
        return True

    def extend_scalars(self, k: int) -> "GModule":
        """The same module over GF(p^k) (prime-field codes embed unchanged)."""
        if not self.field.is_prime_field:
            raise ValueError("scalar extension starts from a prime field")
        return GModule(GF(self.field.p, k), [a.copy() for a in self.action], self.group, self.dim)


def _matrix_power(F, M, e: int):
    out = mx.identity(M.shape[0])
    base = M
    while e:
        if e & 1:
            out = F.matmul(out, base)
        base = F.matmul(base, base)
        e >>= 1
    return out


def permutation_matrix(perm, degree: int | None = None) -> np.ndarray:
    images = perm.images if isinstance(perm, Permutation) else tuple(perm)
    n = len(images) if degree is None else degree
    P = np.zeros((n, n), dtype=np.int64)
    P[np.arange(len(images)), list(images)] = 1
    return P


def trivial_module(G: PermGroup, F: GF) -> GModule:
    return GModule(F, [mx.identity(1) for _ in G.generators], G, 1)


def perm_module(G: PermGroup, F: GF, H=None) -> GModule:
    """Permutation module on the points of ``G`` or, given a subgroup ``H``, on the
    right cosets of ``H`` (the trivial module of ``H`` induced to ``G``)."""
    if H is None:
        return GModule(F, [permutation_matrix(g) for g in G.generators], G, G.degree)
    from ..permgrp.structure import coset_action

    image, _ = coset_action(G, H)
    return GModule(F, [permutation_matrix(g) for g in image.generators], G, image.degree)


def regular_module(G: PermGroup, F: GF) -> GModule:
    """The group algebra as a right module over itself."""
    n = G.order
    mats = []
    for g in G.generator_indices():
        P = np.zeros((n, n), dtype=np.int64)
        P[np.arange(n), G.mul_idx(np.arange(n), g)] = 1
        mats.append(P)
    return GModule(F, mats, G, n)


def kron(F: GF, A, B) -> np.ndarray:
    A = np.asarray(A)
    B = np.asarray(B)
    prod = F.mul(A[:, None, :, None], B[None, :, None, :])
    return prod.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def tensor(M: GModule, N: GModule) -> GModule:
    if M.field is not N.field:
        raise ValueError("modules over different fields")
    F = M.field
    return GModule(F, [kron(F, a, b) for a, b in zip(M.action, N.action)], M.group, M.dim * N.dim)


def dual(M: GModule) -> GModule:
    """Contragredient module: ``g`` acts by the transpose of its inverse."""
    F = M.field
    return GModule(F, [mx.inverse(F, a).T.copy() for a in M.action], M.group, M.dim)


def direct_sum(M: GModule, N: GModule) -> GModule:
    mats = []
    for a, b in zip(M.action, N.action):
        Z = mx.zeros(M.dim + N.dim, M.dim + N.dim)
        Z[:M.dim, :M.dim] = a
        Z[M.dim:, M.dim:] = b
        mats.append(Z)
    return GModule(M.field, mats, M.group, M.dim + N.dim)


def submodule_action(F: GF, mats, S: np.ndarray, pivots) -> tuple[list, list]:
    """Actions on an invariant subspace with RREF basis ``S`` and on the quotient.

    The quotient is taken with respect to the non-pivot coordinates.
    """
    n = mats[0].shape[0] if mats else S.shape[1]
    piv = list(pivots)
    free = [c for c in range(n) if c not in set(piv)]
    sub, quo = [], []
    for g in mats:
        sub.append(F.matmul(S, g)[:, piv])
        gq = g[free]
        quo.append(F.sub(gq, F.matmul(gq[:, piv], S))[:, free])
    return sub, quo


def split_module(M: GModule, S: np.ndarray) -> tuple[GModule, GModule]:
    """Submodule spanned by the rows of ``S`` and the corresponding quotient."""
    F = M.field
    B, piv = mx.echelon_basis(F, S)
    sub, quo = submodule_action(F, M.action, B, piv)
    return (GModule(F, sub, M.group, len(piv)), GModule(F, quo, M.group, M.dim - len(piv)))
