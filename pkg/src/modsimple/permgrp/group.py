"""Permutation groups with a deterministic stabilizer chain.

Besides order and membership, a :class:`PermGroup` can enumerate its elements
as a lexicographically sorted ``numpy`` array.  Most structural algorithms in
this package work on that element table: subgroups become sorted arrays of
element indices, and products, inverses and conjugates are evaluated for many
elements at once.
"""

from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from ..errors import DomainError, MalformedInputError
from .perm import Permutation


def _compose(a: tuple, b: tuple) -> tuple:
    return tuple(b[i] for i in a)


def _invert(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


MUL_TABLE_LIMIT = 6000


class _Level:
    __slots__ = ("point", "gens", "trans")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple] = []
        self.trans: dict[int, tuple] = {}


class PermGroup:
    """A finite group generated by permutations of ``{0, ..., degree-1}``.

    Construction runs a deterministic Schreier-Sims algorithm: base points are
    chosen as the least point moved by the element that forces a new level.
    """

    def __init__(self, generators, degree: int | None = None, name: str | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise MalformedInputError("degree is required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise MalformedInputError(
                    f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.memo: dict = {}
        self._identity = tuple(range(degree))
        self._levels: list[_Level] = []
        self._schreier_sims([g.images for g in gens if not g.is_identity()])
        self.order = math.prod(len(lv.trans) for lv in self._levels)

    # -- Schreier-Sims --------------------------------------------------------

    def _orbit(self, lv: _Level):
        trans = {lv.point: self._identity}
        queue = [lv.point]
        for pt in queue:
            u = trans[pt]
            for s in lv.gens:
                img = s[pt]
                if img not in trans:
                    trans[img] = _compose(u, s)
                    queue.append(img)
        lv.trans = trans

    def _strip(self, g: tuple, start: int):
        for j in range(start, len(self._levels)):
            lv = self._levels[j]
            pt = g[lv.point]
            u = lv.trans.get(pt)
            if u is None:
                return g, j
            g = _compose(g, _invert(u))
        return g, len(self._levels)

    def _new_level_point(self, g: tuple) -> int:
        for i, j in enumerate(g):
            if i != j:
                return i
        raise AssertionError("identity cannot define a base point")

    def _schreier_sims(self, gens: list[tuple]):
        ident = self._identity
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self._levels):
                self._levels.append(_Level(self._new_level_point(g)))
        for i, lv in enumerate(self._levels):
            fixed = [l.point for l in self._levels[:i]]
            lv.gens = [g for g in gens if all(g[b] == b for b in fixed)]
            self._orbit(lv)
        i = len(self._levels) - 1
        while i >= 0:
            lv = self._levels[i]
            restart = None
            for beta, u in list(lv.trans.items()):
                for s in lv.gens:
                    img = s[beta]
                    sg = _compose(_compose(u, s), _invert(lv.trans[img]))
                    if sg == ident:
                        continue
                    h, j = self._strip(sg, i + 1)
                    if j < len(self._levels) or h != ident:
                        if j == len(self._levels):
                            self._levels.append(_Level(self._new_level_point(h)))
                        for l in range(i + 1, j + 1):
                            self._levels[l].gens.append(h)
                            self._orbit(self._levels[l])
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1

    # -- basic queries ----------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen = {}
        for lv in self._levels:
            for g in lv.gens:
                seen.setdefault(g, Permutation._trusted(g))
        return list(seen.values())

    @property
    def basic_orbits(self) -> list[dict[int, Permutation]]:
        return [{pt: Permutation._trusted(u) for pt, u in lv.trans.items()}
                for lv in self._levels]

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermGroup({label}, degree={self.degree}, order={self.order})"

    def sift(self, g: Permutation):
        """Return ``(residue, level)``; ``g`` is a member iff the residue is the identity
        and ``level == len(base)``."""
        h, j = self._strip(g.images, 0)
        return Permutation._trusted(h), j

    def __contains__(self, g) -> bool:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != self.degree:
            return False
        h, j = self._strip(g.images, 0)
        return j == len(self._levels) and h == self._identity

    def verify(self) -> bool:
        """Re-sift every generator and check the order against the basic orbits."""
        ok = all(g in self for g in self.generators)
        return ok and self.order == math.prod(len(lv.trans) for lv in self._levels)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def is_trivial(self) -> bool:
        return self.order == 1

    # -- element table ----------------------------------------------------------

    @cached_property
    def _chain_arrays(self):
        dtype = np.int64
        levels = []
        for lv in self._levels:
            pts = sorted(lv.trans)
            U = np.array([lv.trans[p] for p in pts], dtype=dtype)
            Uinv = np.argsort(U, axis=1).astype(dtype)
            pos = np.full(self.degree, -1, dtype=dtype)
            pos[pts] = np.arange(len(pts))
            levels.append((lv.point, U, Uinv, pos))
        return levels

    @cached_property
    def _table(self):
        levels = self._chain_arrays
        E = np.arange(self.degree, dtype=np.int64)[None, :]
        for point, U, Uinv, pos in reversed(levels):
            # elements at this depth are A * u for A from deeper levels, u-index major
            E = np.concatenate([U[k][E] for k in range(U.shape[0])], axis=0)
        chain_elems = E
        dt = np.uint8 if self.degree <= 256 else np.dtype(">u2")
        keys = _void_keys(chain_elems.astype(dt))
        lex_order = np.argsort(keys, kind="stable")
        lex_rank = np.empty_like(lex_order)
        lex_rank[lex_order] = np.arange(lex_order.size)
        elements = chain_elems[lex_order]
        return elements, lex_rank

    @property
    def elements(self) -> np.ndarray:
        """All elements as an ``(order, degree)`` array of images, lexicographically sorted."""
        return self._table[0]

    def element(self, i: int) -> Permutation:
        return Permutation._trusted(tuple(int(x) for x in self.elements[i]))

    def index(self, g) -> int:
        if isinstance(g, Permutation):
            g = g.images
        idx = self.indices_of(np.asarray(g, dtype=np.int64)[None, :])[0]
        if idx < 0:
            raise DomainError(f"{g} is not an element of the group")
        return int(idx)

    def indices_of(self, X) -> np.ndarray:
        """Element indices of the rows of ``X``; ``-1`` for non-members."""
        X = np.asarray(X, dtype=np.int64)
        m = X.shape[0]
        chain_idx = np.zeros(m, dtype=np.int64)
        ok = np.ones(m, dtype=bool)
        cur = X
        for point, U, Uinv, pos in self._chain_arrays:
            k = pos[cur[:, point]]
            ok &= k >= 0
            k = np.where(k >= 0, k, 0)
            chain_idx = chain_idx * U.shape[0] + k
            cur = np.take_along_axis(Uinv[k], cur, axis=1)
        ok &= np.all(cur == np.arange(self.degree), axis=1)
        _, lex_rank = self._table
        out = lex_rank[chain_idx]
        out[~ok] = -1
        return out

    # element arithmetic on index arrays

    @cached_property
    def right_regular(self) -> list[np.ndarray]:
        """For each generator ``s``, the index permutation ``a -> index(a * s)``."""
        E = self.elements
        out = []
        for g in self.generators:
            img = np.asarray(g.images, dtype=np.int64)
            out.append(self.indices_of(img[E]))
        return out

    @cached_property
    def mul_table(self) -> np.ndarray | None:
        """Full multiplication table ``T[a, b] = index(a * b)`` for small groups, else None.

        Columns are filled along the Cayley-graph spanning tree: if ``b = c * s``
        for a generator ``s`` then column ``b`` is column ``c`` followed by right
        multiplication by ``s``.
        """
        n = self.order
        if n > MUL_TABLE_LIMIT:
            return None
        parent, gen = self.word_tree
        R = self.right_regular
        T = np.empty((n, n), dtype=np.int32)
        T[:, 0] = np.arange(n)
        order = self._tree_order
        for b in order[1:]:
            T[:, b] = R[gen[b]][T[:, parent[b]]]
        return T

    def mul_idx(self, a, b) -> np.ndarray:
        """Indices of the products ``a[i] * b[i]`` (broadcasting)."""
        T = self.mul_table
        if T is not None:
            return T[np.asarray(a), np.asarray(b)].astype(np.int64)
        E = self.elements
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        prod = np.take_along_axis(E[b.ravel()], E[a.ravel()], axis=1)
        return self.indices_of(prod).reshape(a.shape)

    @cached_property
    def inverse_idx(self) -> np.ndarray:
        E = self.elements
        return self.indices_of(np.argsort(E, axis=1))

    @cached_property
    def identity_idx(self) -> int:
        return 0

    def conj_idx(self, a, x) -> np.ndarray:
        """Indices of ``x^-1 * a * x`` (broadcasting)."""
        inv = self.inverse_idx
        T = self.mul_table
        if T is not None:
            a = np.asarray(a)
            x = np.asarray(x)
            return T[T[inv[x], a], x].astype(np.int64)
        a, x = np.broadcast_arrays(a, np.asarray(x))
        E = self.elements
        xa = E[x.ravel()]
        # (x^-1 a x)(i) = x(a(x^-1(i)))
        xinv = E[inv[x.ravel()]]
        aa = E[a.ravel()]
        img = np.take_along_axis(xa, np.take_along_axis(aa, xinv, axis=1), axis=1)
        return self.indices_of(img).reshape(a.shape)

    @cached_property
    def element_orders(self) -> np.ndarray:
        E = self.elements
        n = E.shape[0]
        ident = np.arange(self.degree)
        orders = np.zeros(n, dtype=np.int64)
        cur = E.copy()
        k = 1
        todo = np.ones(n, dtype=bool)
        while todo.any():
            done = todo & np.all(cur == ident, axis=1)
            orders[done] = k
            todo &= ~done
            cur = np.take_along_axis(E, cur, axis=1)
            k += 1
        return orders

    def generator_indices(self) -> np.ndarray:
        if not self.generators:
            return np.zeros(0, dtype=np.int64)
        return self.indices_of(np.array([g.images for g in self.generators]))

    @cached_property
    def word_tree(self):
        """Breadth-first spanning tree of the Cayley graph: ``(parent, gen)`` arrays."""
        n = self.order
        parent = np.full(n, -1, dtype=np.int64)
        gen = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        visit = [frontier]
        R = self.right_regular
        while frontier.size:
            nxt = []
            for gi, Rg in enumerate(R):
                prod = Rg[frontier]
                new = ~seen[prod]
                # first occurrence wins
                cand, first = np.unique(prod[new], return_index=True)
                parent[cand] = frontier[new][first]
                gen[cand] = gi
                seen[cand] = True
                nxt.append(cand)
            frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
            visit.append(frontier)
        self._tree_order = np.concatenate(visit)
        return parent, gen

    def word(self, i: int) -> list[int]:
        """Generator indices whose left-to-right product is element ``i``."""
        parent, gen = self.word_tree
        out = []
        while i != 0:
            out.append(int(gen[i]))
            i = int(parent[i])
        return out[::-1]

    # -- subgroups on index sets -------------------------------------------------

    def subgroup(self, gens, name: str | None = None) -> "PermGroup":
        """The subgroup generated by the given permutations or element indices."""
        perms = [self.element(int(g)) if np.isscalar(g) or isinstance(g, (int, np.integer))
                 else (g if isinstance(g, Permutation) else Permutation(g)) for g in gens]
        for g in perms:
            if g not in self:
                raise DomainError(f"{g} is not an element of the group")
        return PermGroup(perms, degree=self.degree, name=name)

    def member_indices(self, H: "PermGroup") -> np.ndarray:
        """Sorted element indices (in this group) of the elements of ``H``."""
        idx = self.indices_of(H.elements)
        if np.any(idx < 0):
            raise DomainError("not a subgroup of this group")
        return np.sort(idx)

    def subgroup_from_indices(self, idx, name: str | None = None) -> "PermGroup":
        """Build a subgroup from the (sorted) element indices of a subset known to be a group.

        Generators are chosen greedily in lexicographic order.
        """
        idx = np.unique(np.asarray(idx, dtype=np.int64))
        target = idx.size
        if target <= 1:
            return PermGroup([], degree=self.degree, name=name)
        mask = np.zeros(self.order, dtype=bool)
        gens: list[int] = []
        cur = np.array([0])
        cur_mask = np.zeros(self.order, dtype=bool)
        cur_mask[0] = True
        while cur.size < target:
            cand = idx[~cur_mask[idx]]
            gens.append(int(cand[0]))
            cur = self.closure(gens)
            cur_mask[:] = False
            cur_mask[cur] = True
        mask[idx] = True
        if cur.size != target or not mask[cur].all():
            raise DomainError("index set is not a subgroup")
        return PermGroup([self.element(g) for g in gens], degree=self.degree, name=name)

    def closure(self, gens) -> np.ndarray:
        """Sorted element indices of the subgroup generated by element indices ``gens``."""
        gens = np.unique(np.asarray(gens, dtype=np.int64))
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        new = np.zeros(self.order, dtype=bool)
        while frontier.size:
            prod = self.mul_idx(frontier[:, None], gens[None, :]).ravel()
            new[:] = False
            new[prod] = True
            new &= ~seen
            seen |= new
            frontier = np.flatnonzero(new)
        return np.flatnonzero(seen)


def _void_keys(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    return arr.view(np.dtype((np.void, arr.dtype.itemsize * arr.shape[1]))).ravel()


def group_from_generators(gens, degree: int | None = None, name: str | None = None) -> PermGroup:
    """Build a group from permutations (or image arrays); see :class:`PermGroup`."""
    return PermGroup(gens, degree=degree, name=name)
