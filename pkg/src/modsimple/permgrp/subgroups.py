"""Subgroup algorithms on the element table of a group.

Subgroups of ``G`` are handled here as sorted ``int64`` arrays of element
indices of ``G`` (see :meth:`PermGroup.indices_of`).  Functions taking
:class:`PermGroup` arguments convert at the boundary.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import CapabilityError, DomainError
from .classes import class_labels
from .group import PermGroup

DEFAULT_LATTICE_BOUND = 5000


# -- helpers on index sets --------------------------------------------------------


def p_part(n: int, p: int) -> int:
    """The largest power of ``p`` dividing ``n``."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while n % p:
        p += 1
    while n % p == 0:
        n //= p
    return n == 1


def key(idx: np.ndarray) -> bytes:
    return np.asarray(idx, dtype=np.int64).tobytes()


def mask_of(G: PermGroup, idx) -> np.ndarray:
    m = np.zeros(G.order, dtype=bool)
    m[np.asarray(idx, dtype=np.int64)] = True
    return m


def as_indices(G: PermGroup, H) -> np.ndarray:
    """Element indices of ``H`` in ``G``; ``H`` may be a PermGroup or an index array."""
    if isinstance(H, PermGroup):
        if H.degree != G.degree or not H.is_subgroup_of(G):
            raise DomainError("subgroup is not contained in the group")
        return G.member_indices(H)
    return np.unique(np.asarray(H, dtype=np.int64))


def generators_of(G: PermGroup, idx) -> np.ndarray:
    """A small generating set (element indices) of the subgroup ``idx``, greedy in index order."""
    idx = np.asarray(idx, dtype=np.int64)
    if idx.size <= 1:
        return np.zeros(0, dtype=np.int64)
    gens: list[int] = []
    cur = np.zeros(G.order, dtype=bool)
    cur[0] = True
    count = 1
    while count < idx.size:
        cand = idx[~cur[idx]]
        gens.append(int(cand[0]))
        closed = G.closure(gens)
        cur[:] = False
        cur[closed] = True
        count = closed.size
    return np.array(gens, dtype=np.int64)


def power_idx(G: PermGroup, idx, e: int) -> np.ndarray:
    idx = np.asarray(idx, dtype=np.int64)
    result = np.zeros_like(idx)
    base = idx.copy()
    while e:
        if e & 1:
            result = G.mul_idx(result, base)
        e >>= 1
        if e:
            base = G.mul_idx(base, base)
    return result


def conjugate(G: PermGroup, idx, x: int) -> np.ndarray:
    return np.sort(G.conj_idx(np.asarray(idx), x))


def normalizes(G: PermGroup, gens, mask: np.ndarray, xs) -> np.ndarray:
    """Boolean array: does ``xs[i]`` normalize the subgroup with the given generators and mask?"""
    xs = np.asarray(xs, dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size == 0:
        return np.ones(xs.size, dtype=bool)
    conj = G.conj_idx(gens[None, :], xs[:, None])
    return mask[conj].all(axis=1)


def normalizer_idx(G: PermGroup, idx) -> np.ndarray:
    idx = np.asarray(idx, dtype=np.int64)
    gens = generators_of(G, idx)
    allx = np.arange(G.order)
    return allx[normalizes(G, gens, mask_of(G, idx), allx)]


def centralizer_idx(G: PermGroup, gens) -> np.ndarray:
    allx = np.arange(G.order)
    ok = np.ones(G.order, dtype=bool)
    for h in np.asarray(gens, dtype=np.int64):
        ok &= G.mul_idx(allx, h) == G.mul_idx(h, allx)
    return allx[ok]


def is_normal_idx(G: PermGroup, idx) -> bool:
    gens = G.generator_indices()
    return bool(normalizes(G, generators_of(G, idx), mask_of(G, idx), gens).all()) if gens.size else True


def is_abelian_idx(G: PermGroup, gens) -> bool:
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size < 2:
        return True
    a = G.mul_idx(gens[:, None], gens[None, :])
    b = G.mul_idx(gens[None, :], gens[:, None])
    return bool(np.array_equal(a, b))


def normal_closure_idx(G: PermGroup, seeds) -> np.ndarray:
    """Smallest normal subgroup containing the given elements."""
    seeds = np.unique(np.asarray(seeds, dtype=np.int64))
    if seeds.size == 0 or (seeds.size == 1 and seeds[0] == 0):
        return np.array([0])
    labels = class_labels(G)
    needed = np.isin(labels, np.unique(labels[seeds]))
    target = np.flatnonzero(needed)
    gens: list[int] = []
    cur = np.zeros(G.order, dtype=bool)
    cur[0] = True
    while True:
        missing = target[~cur[target]]
        if missing.size == 0:
            break
        gens.append(int(missing[0]))
        closed = G.closure(gens)
        cur[:] = False
        cur[closed] = True
        if not needed[closed].all():
            needed |= np.isin(labels, np.unique(labels[closed]))
            target = np.flatnonzero(needed)
    return np.flatnonzero(cur)


def conjugates(G: PermGroup, idx) -> list[np.ndarray]:
    """All distinct G-conjugates of a subgroup, sorted by their index arrays."""
    idx = np.asarray(idx, dtype=np.int64)
    chunk = max(1, 4_000_000 // max(1, idx.size))
    found: dict[bytes, np.ndarray] = {}
    for start in range(0, G.order, chunk):
        xs = np.arange(start, min(G.order, start + chunk))
        rows = np.sort(G.conj_idx(idx[None, :], xs[:, None]), axis=1)
        for r in rows:
            found.setdefault(r.tobytes(), r)
    return sorted(found.values(), key=lambda r: r.tolist())


def right_transversal(G: PermGroup, H_idx) -> np.ndarray:
    """Least element of each right coset ``H x``."""
    H_idx = np.asarray(H_idx, dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    reps = []
    for x in range(G.order):
        if seen[x]:
            continue
        reps.append(x)
        seen[G.mul_idx(H_idx, x)] = True
    return np.array(reps, dtype=np.int64)


def p_element_mask(G: PermGroup, p: int) -> np.ndarray:
    o = G.element_orders
    out = o == 1
    k = p
    while k <= o.max():
        out |= o == k
        k *= p
    return out


# -- PermGroup-level operations -----------------------------------------------------


def centralizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """Centralizer of ``H`` in ``G``."""
    as_indices(G, H)
    gens = G.indices_of(np.array([g.images for g in H.generators])) if H.generators else []
    return G.subgroup_from_indices(centralizer_idx(G, gens), name="centralizer")


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """Normalizer of ``H`` in ``G``."""
    idx = as_indices(G, H)
    return G.subgroup_from_indices(normalizer_idx(G, idx), name="normalizer")


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    if not H.is_subgroup_of(G):
        return False
    return all(g ** x in H for g in H.generators for x in G.generators)


def sylow_idx(G: PermGroup, p: int) -> np.ndarray:
    """Index set of a Sylow p-subgroup, grown by normalizer climbing."""
    memo_key = ("sylow", p)
    if memo_key in G.memo:
        return G.memo[memo_key]
    target = p_part(G.order, p)
    pel = p_element_mask(G, p)
    Q = np.array([0])
    gens: list[int] = []
    while Q.size < target:
        qmask = mask_of(G, Q)
        N = normalizer_idx(G, Q) if gens else np.arange(G.order)
        cand = N[pel[N] & ~qmask[N]]
        if cand.size == 0:  # pragma: no cover - excluded by Sylow's theorems
            raise AssertionError("normalizer climbing stalled")
        gens.append(int(cand[0]))
        Q = G.closure(gens)
    G.memo[memo_key] = Q
    return Q


def sylow(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup of ``G`` (trivial when ``p`` does not divide the order)."""
    if p < 2 or any(p % r == 0 for r in range(2, int(math.isqrt(p)) + 1)):
        raise DomainError(f"{p} is not prime")
    return G.subgroup_from_indices(sylow_idx(G, p), name=f"Sylow {p}")


# -- subgroups of p-groups ------------------------------------------------------------


def subgroups_of_pgroup(G: PermGroup, P_idx, p: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """All subgroups of the p-subgroup ``P_idx`` of ``G`` as ``(indices, generators)`` pairs.

    Every nontrivial subgroup of a p-group has a normal subgroup of index p, so
    each layer is reached by adjoining one normalizing element whose p-th power
    already lies in the smaller subgroup.
    """
    P_idx = np.asarray(P_idx, dtype=np.int64)
    memo_key = ("pgroup_subgroups", key(P_idx))
    if memo_key in G.memo:
        return G.memo[memo_key]
    pth = power_idx(G, P_idx, p)
    found = {key(np.array([0])): (np.array([0]), np.zeros(0, dtype=np.int64))}
    layer = [found[key(np.array([0]))]]
    while layer:
        nxt = []
        for H, gens in layer:
            hmask = mask_of(G, H)
            ok = ~hmask[P_idx] & hmask[pth] & normalizes(G, gens, hmask, P_idx)
            covered = hmask.copy()
            for pos in np.flatnonzero(ok):
                x = int(P_idx[pos])
                if covered[x]:
                    continue
                parts = [H]
                xj = x
                for _ in range(p - 1):
                    parts.append(G.mul_idx(H, xj))
                    xj = int(G.mul_idx(xj, x))
                K = np.sort(np.concatenate(parts))
                covered[K] = True
                k = key(K)
                if k not in found:
                    entry = (K, np.append(gens, x))
                    found[k] = entry
                    nxt.append(entry)
        layer = nxt
    out = sorted(found.values(), key=lambda e: (e[0].size, e[0].tolist()))
    G.memo[memo_key] = out
    return out


def is_elementary_abelian_idx(G: PermGroup, idx, gens, p: int) -> bool:
    if not is_abelian_idx(G, gens):
        return False
    return bool(np.all(G.element_orders[np.asarray(idx)] <= p))


def max_abelian_p_order(G: PermGroup, p: int, container: PermGroup | None = None,
                        must_contain: PermGroup | None = None) -> int:
    """Largest order of an abelian p-subgroup of ``container`` containing a
    ``container``-conjugate of ``must_contain``.

    Such a subgroup of largest order is automatically maximal abelian.  The
    search runs over the subgroups of one Sylow p-subgroup of ``container``.
    """
    C = G if container is None else container
    if C is not G and not C.is_subgroup_of(G):
        raise DomainError("container is not a subgroup of G")
    B_conj: list[np.ndarray] = []
    if must_contain is not None and must_contain.order > 1:
        if not must_contain.is_subgroup_of(C):
            raise DomainError("must_contain is not a subgroup of the container")
        if p_part(must_contain.order, p) != must_contain.order or not must_contain.is_abelian():
            raise DomainError("must_contain is not an abelian p-group")
        B_conj = conjugates(C, C.member_indices(must_contain))
    P = sylow_idx(C, p)
    best = 0
    for H, gens in subgroups_of_pgroup(C, P, p):
        if H.size <= best or not is_abelian_idx(C, gens):
            continue
        if B_conj:
            hmask = mask_of(C, H)
            if not any(hmask[b].all() for b in B_conj):
                continue
        best = H.size
    return best


def maximal_abelian_p_orders(G: PermGroup, p: int) -> list[int]:
    """Orders of the maximal abelian p-subgroups of ``G`` (one entry per subgroup of a
    Sylow subgroup that is maximal abelian in ``G``).

    An abelian p-subgroup ``A`` is maximal exactly when ``A`` is a Sylow
    p-subgroup of its centralizer.
    """
    P = sylow_idx(G, p)
    out = []
    for H, gens in subgroups_of_pgroup(G, P, p):
        if H.size == 1 and G.order % p == 0:
            continue
        if not is_abelian_idx(G, gens):
            continue
        C = centralizer_idx(G, gens)
        if p_part(C.size, p) == H.size:
            out.append(int(H.size))
    return out


# -- subgroup lattice ---------------------------------------------------------------------


class SubgroupLattice:
    """Conjugacy classes of subgroups of a small group, found by iterated joins with
    cyclic subgroups of prime-power order.

    Attributes: ``reps`` (index arrays, sorted by order then indices) and
    ``maximal`` (flags marking classes of maximal subgroups).
    """

    def __init__(self, G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND):
        if G.order > bound:
            raise CapabilityError(
                f"group order {G.order} exceeds the subgroup-lattice bound {bound}", bound=bound)
        self.G = G
        n = G.order
        orders = G.element_orders
        ppow = np.array([i for i in range(1, n) if is_prime_power(int(orders[i]))], dtype=np.int64)
        # one generator per cyclic subgroup: the least element generating it
        cyc_of = np.full(n, -1, dtype=np.int64)
        cyc_gen: list[int] = []
        for x in ppow:
            if cyc_of[x] >= 0:
                continue
            o = int(orders[x])
            powers = [x]
            cur = x
            for _ in range(o - 2):
                cur = int(G.mul_idx(cur, x))
                powers.append(cur)
            gens_of_cyclic = [y for j, y in enumerate(powers, start=1) if math.gcd(j, o) == 1]
            for y in gens_of_cyclic:
                cyc_of[y] = len(cyc_gen)
            cyc_gen.append(x)
        self.cyclic_generators = np.array(cyc_gen, dtype=np.int64)
        self._cyc_of = cyc_of
        self._index: dict[bytes, int] = {}
        self.reps: list[np.ndarray] = []
        self.maximal: list[bool] = []
        queue = [self._register(np.array([0]))]
        head = 0
        while head < len(queue):
            ci = queue[head]
            head += 1
            H = self.reps[ci]
            if H.size == n:
                self.maximal[ci] = False
                continue
            hmask = mask_of(G, H)
            hgens = generators_of(G, H)
            proper_over = False
            for c in self._orbit_reps(H, hgens):
                x = int(self.cyclic_generators[c])
                if hmask[x]:
                    continue
                K = G.closure(np.append(hgens, x))
                if K.size < n:
                    proper_over = True
                kk = key(K)
                if kk not in self._index:
                    queue.append(self._register(K))
            self.maximal[ci] = not proper_over
        order = sorted(range(len(self.reps)), key=lambda i: (self.reps[i].size, self.reps[i].tolist()))
        self.reps = [self.reps[i] for i in order]
        self.maximal = [self.maximal[i] for i in order]

    def _register(self, K: np.ndarray) -> int:
        ci = len(self.reps)
        self.reps.append(K)
        self.maximal.append(False)
        for c in conjugates(self.G, K):
            self._index[key(c)] = ci
        return ci

    def _orbit_reps(self, H, hgens):
        """Representatives of the N_G(H)-orbits on cyclic subgroups (by generator)."""
        G = self.G
        N = normalizer_idx(G, H)
        ngens = generators_of(G, N)
        m = self.cyclic_generators.size
        parent = np.arange(m)

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in ngens:
            img = self._cyc_of[G.conj_idx(self.cyclic_generators, g)]
            for a, b in zip(range(m), img):
                ra, rb = find(a), find(int(b))
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return sorted({find(a) for a in range(m)})

    def __len__(self):
        return len(self.reps)

    def maximal_classes(self) -> list[np.ndarray]:
        return [r for r, mx in zip(self.reps, self.maximal) if mx]


def subgroup_lattice(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> SubgroupLattice:
    if G.order > bound:
        raise CapabilityError(
            f"group order {G.order} exceeds the subgroup-lattice bound {bound}", bound=bound)
    memo_key = ("lattice",)
    if memo_key not in G.memo:
        G.memo[memo_key] = SubgroupLattice(G, bound)
    return G.memo[memo_key]


def frattini_idx(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> np.ndarray:
    if G.order == 1:
        return np.array([0])
    lat = subgroup_lattice(G, bound)
    labels = class_labels(G)
    nclass = labels.max() + 1
    inside = np.ones(nclass, dtype=bool)
    sizes = np.bincount(labels, minlength=nclass)
    for M in lat.maximal_classes():
        # core of M: the classes lying entirely inside M
        inside &= np.bincount(labels[M], minlength=nclass) == sizes
    return np.flatnonzero(inside[labels])


def frattini(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> PermGroup:
    """Frattini subgroup: the intersection of all maximal subgroups."""
    return G.subgroup_from_indices(frattini_idx(G, bound), name="Frattini")
