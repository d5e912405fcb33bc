"""Dense matrices over GF(p^k): echelon forms, nullspaces and spinning.

Matrices are 2-d ``int64`` arrays of element codes paired with a :class:`GF`.
Vectors are rows; a matrix acts on the right (``v -> v @ A``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import GF


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def rref(F: GF, M):
    """Reduced row echelon form.

    Returns ``(R, rank, pivots)``; ``R`` has the shape of ``M`` with the zero rows
    at the bottom and ``pivots`` lists the pivot column of each nonzero row.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = R.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        lead = R[r, c]
        if lead != 1:
            R[r] = F.mul(F.inv(lead), R[r])
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = F.sub(R[hit], F.mul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def echelon_basis(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Nonzero rows of the RREF of ``M`` together with their pivot columns."""
    M = np.asarray(M, dtype=np.int64)
    if M.shape[0] == 0:
        return M.reshape(0, M.shape[1] if M.ndim == 2 else 0), []
    R, rank, piv = rref(F, M)
    return R[:rank], piv


def rank(F: GF, M) -> int:
    return rref(F, M)[1]


def nullspace(F: GF, M) -> np.ndarray:
    """Basis (as rows) of ``{x : M @ x == 0}``."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return identity(cols)
    R, r, piv = rref(F, M)
    free = [c for c in range(cols) if c not in set(piv)]
    N = zeros(len(free), cols)
    for j, f in enumerate(free):
        N[j, f] = 1
        if r:
            N[j, piv] = F.neg(R[:r, f])
    return N


def left_nullspace(F: GF, M) -> np.ndarray:
    """Basis (as rows) of ``{v : v @ M == 0}``."""
    return nullspace(F, np.asarray(M).T)


def inverse(F: GF, M) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    R, r, piv = rref(F, np.hstack([M, identity(n)]))
    if r < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def reduce_rows(F: GF, X, basis, pivots):
    """Reduce rows of ``X`` modulo the span of a fully reduced echelon ``basis``."""
    if len(pivots) == 0:
        return np.array(X, dtype=np.int64, copy=True)
    return F.sub(X, F.matmul(X[:, pivots], basis))


def _merge(F, B, piv, R, rpiv):
    # both in RREF; R already reduced modulo B
    if len(piv):
        B = F.sub(B, F.matmul(B[:, rpiv], R))
    allrows = np.vstack([B, R]) if len(piv) else R
    allpiv = list(piv) + list(rpiv)
    order = np.argsort(allpiv, kind="stable")
    return allrows[order], [allpiv[i] for i in order]


def spin(F: GF, seeds, mats) -> np.ndarray:
    """Echelon basis of the smallest subspace containing ``seeds`` and closed
    under right multiplication by every matrix in ``mats``."""
    seeds = np.atleast_2d(np.asarray(seeds, dtype=np.int64))
    B, piv = echelon_basis(F, seeds)
    new = B
    while new.shape[0]:
        W = np.vstack([F.matmul(new, g) for g in mats]) if mats else new[:0]
        if W.shape[0] == 0:
            break
        W = reduce_rows(F, W, B, piv)
        R, rpiv = echelon_basis(F, W)
        if not rpiv:
            break
        B, piv = _merge(F, B, piv, R, rpiv)
        new = R
    return B


def spin_with_pivots(F: GF, seeds, mats):
    B = spin(F, seeds, mats)
    piv = [int(np.flatnonzero(row)[0]) for row in B]
    return B, piv


@dataclass(frozen=True)
class SpinScript:
    """A standard basis obtained by spinning one vector.

    Row ``i`` of ``basis`` is ``basis[src] @ mats[gen]`` for ``steps[i-1] == (src, gen)``.
    """

    basis: np.ndarray
    steps: tuple[tuple[int, int], ...]


def spin_script(F: GF, v, mats, limit: int | None = None) -> SpinScript:
    """Spin a single vector, recording how each new basis vector was produced."""
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    n = v.size
    rows = [v]
    steps = []
    E = zeros(0, n)
    piv: list[int] = []
    E, piv = _absorb(F, E, piv, v)
    i = 0
    while i < len(rows):
        for gi, g in enumerate(mats):
            w = F.matmul(rows[i], g)
            r = reduce_rows(F, w[None, :], E, piv)[0] if piv else w
            if np.any(r):
                rows.append(w)
                steps.append((i, gi))
                E, piv = _absorb(F, E, piv, r)
                if limit is not None and len(rows) > limit:
                    return SpinScript(np.array(rows), tuple(steps))
        i += 1
    return SpinScript(np.array(rows), tuple(steps))


def _absorb(F, E, piv, r):
    nz = np.flatnonzero(r)
    if nz.size == 0:
        return E, piv
    c = int(nz[0])
    r = F.mul(F.inv(r[c]), r)
    if len(piv):
        E = F.sub(E, F.mul(E[:, c][:, None], r[None, :]))
    E = np.vstack([E, r[None, :]])
    return E, piv + [c]


def apply_script(F: GF, w, mats, steps) -> np.ndarray:
    """Replay a spinning script starting from vector ``w``."""
    rows = [np.asarray(w, dtype=np.int64).reshape(-1)]
    for src, gi in steps:
        rows.append(F.matmul(rows[src], mats[gi]))
    return np.array(rows)


def charpoly(F: GF, A) -> np.ndarray:
    """Characteristic polynomial of a square matrix (low degree first).

    Computed as the product of the relative minimal polynomials of a chain of
    cyclic subspaces seeded by standard basis vectors.
    """
    from . import poly as P

    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    E = zeros(0, n)
    coef = zeros(0, n + 1)
    piv: list[int] = []
    result = np.array([1], dtype=np.int64)
    for start in range(n):
        if len(piv) == n:
            break
        coef[:] = 0
        raw = zeros(1, n)[0]
        raw[start] = 1
        m = 0
        while True:
            c = zeros(1, n + 1)[0]
            c[m] = 1
            x = raw
            if piv:
                xp = x[piv]
                x = F.sub(x, F.matmul(xp, E))
                c = F.sub(c, F.matmul(xp, coef))
            nz = np.flatnonzero(x)
            if nz.size == 0:
                # c[m] == 1, so the relation is already monic
                result = P.mul(F, result, P.trim(c[: m + 1]))
                break
            col = int(nz[0])
            s = F.inv(x[col])
            x = F.mul(s, x)
            c = F.mul(s, c)
            if piv:
                ecol = E[:, col].copy()
                E = F.sub(E, F.mul(ecol[:, None], x[None, :]))
                coef = F.sub(coef, F.mul(ecol[:, None], c[None, :]))
            E = np.vstack([E, x[None, :]])
            coef = np.vstack([coef, c[None, :]])
            piv.append(col)
            raw = F.matmul(raw, A)
            m += 1
    return result


@dataclass(frozen=True)
class FqMatrix:
    """A matrix over a finite field; a thin convenience wrapper over an array."""

    field: GF
    entries: np.ndarray

    def __post_init__(self):
        arr = self.field.asarray(self.entries)
        if arr.ndim != 2:
            raise ValueError("FqMatrix entries must be 2-d")
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        return FqMatrix(self.field, self.field.matmul(self.entries, other.entries))

    def __add__(self, other: "FqMatrix") -> "FqMatrix":
        return FqMatrix(self.field, self.field.add(self.entries, other.entries))

    def __eq__(self, other):
        return (isinstance(other, FqMatrix) and self.field is other.field
                and np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash((self.field.q, self.entries.tobytes(), self.entries.shape))

    def rref(self):
        R, r, piv = rref(self.field, self.entries)
        return FqMatrix(self.field, R), r, piv

    def nullspace(self) -> "FqMatrix":
        return FqMatrix(self.field, nullspace(self.field, self.entries))

    def inverse(self) -> "FqMatrix":
        return FqMatrix(self.field, inverse(self.field, self.entries))

    def transpose(self) -> "FqMatrix":
        return FqMatrix(self.field, self.entries.T.copy())
