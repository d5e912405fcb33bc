"""Sylow subgroups of GL(n, q) and regular orbits on the natural module."""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import CapabilityError, DomainError
from ..gflinalg import matrix as mx
from ..gflinalg import poly as P
from ..gflinalg.field import GF, is_prime, prime_factors, prime_power
from ..gflinalg.matrix import FqMatrix
from ..permgrp.subgroups import p_part

ENUMERATION_BOUND = 2 ** 24
CLOSURE_LIMIT = 2 ** 20


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def _mult_order(q: int, p: int) -> int:
    d, x = 1, q % p
    while x != 1:
        x = (x * q) % p
        d += 1
    return d


def _companion(F: GF, f) -> np.ndarray:
    """Matrix of multiplication by x on GF(q)[x]/(f) in the basis 1, x, ..., x^(d-1)
    (row convention: row i is the image of x^i)."""
    d = P.degree(f)
    C = mx.zeros(d, d)
    for i in range(d - 1):
        C[i, i + 1] = 1
    C[d - 1] = F.neg(np.asarray(f[:d], dtype=np.int64))
    return C


def _matrix_power(F: GF, M, e: int) -> np.ndarray:
    out = mx.identity(M.shape[0])
    base = M
    while e:
        if e & 1:
            out = F.matmul(out, base)
        base = F.matmul(base, base)
        e >>= 1
    return out


def singer_cycle(F: GF, d: int) -> tuple[np.ndarray, np.ndarray]:
    """A matrix of order q^d - 1 in GL(d, q) and its primitive defining polynomial."""
    N = F.q ** d - 1
    eye = mx.identity(d)
    if d == 1:
        return np.array([[F.generator]], dtype=np.int64), P.poly([F.neg(F.generator), 1])
    for code in range(F.q ** d):
        low = [(code // F.q ** i) % F.q for i in range(d)]
        if low[0] == 0:
            continue
        f = P.poly(low + [1])
        if not P.is_irreducible(F, f):
            continue
        C = _companion(F, f)
        if all(not np.array_equal(_matrix_power(F, C, N // r), eye) for r in prime_factors(N)):
            return C, f
    raise AssertionError("no primitive polynomial found")  # pragma: no cover


def _frobenius_matrix(F: GF, f) -> np.ndarray:
    """Matrix of y -> y^q on GF(q)[x]/(f) (row i is the image of x^i)."""
    d = P.degree(f)
    M = mx.zeros(d, d)
    for i in range(d):
        img = P.powmod(F, P.poly([0] * i + [1]), F.q, f) if i else P.poly([1])
        M[i, : img.size] = img
    return M


def _sym_sylow_perms(m: int, p: int) -> list[list[int]]:
    """Generators (image lists on m points) of a Sylow p-subgroup of S_m."""
    gens = []
    start = 0
    digits = []
    r = m
    while r:
        digits.append(r % p)
        r //= p
    for k in range(len(digits) - 1, 0, -1):
        size = p ** k
        for _ in range(digits[k]):
            for j in range(k):
                img = list(range(m))
                block = p ** (j + 1)
                for i in range(block):
                    img[start + i] = start + (i + p ** j) % block
                gens.append(img)
            start += size
    return gens


def _block_diag(blocks, n: int, F: GF) -> np.ndarray:
    M = mx.identity(n)
    pos = 0
    for B in blocks:
        d = B.shape[0]
        M[pos:pos + d, pos:pos + d] = B
        pos += d
    return M


def _block_perm(img, d: int, n: int) -> np.ndarray:
    M = mx.identity(n)
    for i, j in enumerate(img):
        M[i * d:(i + 1) * d] = 0
        M[i * d:(i + 1) * d, j * d:(j + 1) * d] = mx.identity(d)
    return M


def matrix_group_order(F: GF, gens, limit: int = CLOSURE_LIMIT) -> int:
    """Order of the group generated by invertible matrices, by closure."""
    if not gens:
        return 1
    n = gens[0].shape[0]
    eye = mx.identity(n)
    seen = {eye.tobytes()}
    frontier = [eye]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = F.matmul(A, g)
                k = B.tobytes()
                if k not in seen:
                    seen.add(k)
                    nxt.append(B)
                    if len(seen) > limit:
                        raise CapabilityError(f"matrix group larger than {limit}", bound=limit)
        frontier = nxt
    return len(seen)


def sylow_glnq(n: int, q: int, p: int, verify: bool = True) -> list[FqMatrix]:
    """Generators of a Sylow p-subgroup of GL(n, q) for a prime p not dividing q.

    A trivial Sylow subgroup is returned as the single identity matrix so the
    field stays attached to the result.

    Odd p: a p-power of a Singer cycle of GL(d, q), d the order of q mod p, in each
    of the n // d diagonal blocks, wreathed by a Sylow p-subgroup of S_(n//d).
    p = 2: q = 1 mod 4 uses the 2-part of GF(q)^* wreathed by a Sylow 2-subgroup of
    S_n; q = 3 mod 4 uses the semidihedral 2-part of GL(2, q) (Singer 2-part and
    Frobenius) wreathed by a Sylow 2-subgroup of S_(n//2), with -1 on the last
    coordinate when n is odd.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    char, k = prime_power(q)
    if char == p:
        raise DomainError("p must differ from the characteristic of GF(q)")
    if n < 1:
        raise DomainError("n must be positive")
    if q ** n > ENUMERATION_BOUND:
        raise CapabilityError(f"q^n = {q ** n} exceeds the bound {ENUMERATION_BOUND}", bound=ENUMERATION_BOUND)
    F = GF(char, k)
    gens: list[np.ndarray] = []
    if p > 2 or q % 4 == 1:
        d = _mult_order(q, p) if p > 2 else 1
        m = n // d
        if m:
            C, _ = singer_cycle(F, d)
            N = q ** d - 1
            S = _matrix_power(F, C, N // p_part(N, p))
            for b in range(m):
                blocks = [mx.identity(d)] * m
                blocks[b] = S
                gens.append(_block_diag(blocks, n, F))
            gens.extend(_block_perm(img, d, n) for img in _sym_sylow_perms(m, p))
    else:
        m = n // 2
        if m:
            C, f = singer_cycle(F, 2)
            N = q * q - 1
            S = _matrix_power(F, C, N // p_part(N, 2))
            Fr = _frobenius_matrix(F, f)
            for b in range(m):
                for X in (S, Fr):
                    blocks = [mx.identity(2)] * m
                    blocks[b] = X
                    gens.append(_block_diag(blocks, n, F))
            gens.extend(_block_perm(img, 2, n) for img in _sym_sylow_perms(m, 2))
        if n % 2:
            M = mx.identity(n)
            M[n - 1, n - 1] = F.neg(1)
            gens.append(M)
    gens = [g for g in gens if not np.array_equal(g, mx.identity(n))] or [mx.identity(n)]
    target = p_part(gl_order(n, q), p)
    if verify:
        order = matrix_group_order(F, gens) if target <= CLOSURE_LIMIT else None
        if order is not None and order != target:
            raise AssertionError(f"constructed group has order {order}, expected {target}")
    return [FqMatrix(F, g) for g in gens]


def count_regular_orbits(action, n: int | None = None, bound: int = ENUMERATION_BOUND) -> int:
    """Number of orbits of size |R| of the matrix group R = <action> on GF(q)^n."""
    mats = [a.entries if isinstance(a, FqMatrix) else np.asarray(a, dtype=np.int64) for a in action]
    F = action[0].field if action and isinstance(action[0], FqMatrix) else None
    if F is None:
        raise DomainError("count_regular_orbits needs FqMatrix generators (or use orbit_counts)")
    n = mats[0].shape[0] if n is None else n
    return orbit_counts(F, mats, n, bound)[1]


def orbit_counts(F: GF, mats, n: int, bound: int = ENUMERATION_BOUND) -> tuple[int, int, list[int]]:
    """Returns ``(|R|, number of regular orbits, sorted orbit sizes)``."""
    q = F.q
    total = q ** n
    if total > bound:
        raise CapabilityError(f"q^n = {total} exceeds the bound {bound}", bound=bound)
    order = matrix_group_order(F, mats)
    weights = q ** np.arange(n, dtype=np.int64)
    src_all, dst_all = [], []
    chunk = max(1, 2 ** 20 // max(1, n))
    for g in mats:
        for start in range(0, total, chunk):
            codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
            V = (codes[:, None] // weights[None, :]) % q
            img = F.matmul(V, g) @ weights
            src_all.append(codes)
            dst_all.append(img)
    if src_all:
        src = np.concatenate(src_all)
        dst = np.concatenate(dst_all)
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(total, total))
        _, labels = connected_components(graph, directed=True, connection="weak")
    else:
        labels = np.arange(total)
    sizes = np.bincount(labels)
    return order, int(np.count_nonzero(sizes == order)), sorted(int(s) for s in sizes)
