"""Univariate polynomials over GF(p^k) and their factorization.

Polynomials are 1-d ``int64`` arrays of element codes, lowest degree first,
with no trailing zeros (the zero polynomial is the empty array).
Factorization is the classical squarefree / distinct-degree / equal-degree
pipeline (Cantor-Zassenhaus), driven by a fixed-seed generator so results
are reproducible.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError

_EDF_SEED = 0x5EED


def poly(coeffs) -> np.ndarray:
    return trim(np.asarray(coeffs, dtype=np.int64))


def trim(f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    nz = np.nonzero(f)[0]
    if nz.size == 0:
        return f[:0].copy()
    return f[: nz[-1] + 1].copy()


def degree(f) -> int:
    return len(f) - 1


def is_one(f) -> bool:
    return len(f) == 1 and f[0] == 1


def x_poly() -> np.ndarray:
    return np.array([0, 1], dtype=np.int64)


def add(F, a, b):
    n = max(len(a), len(b))
    aa = np.zeros(n, dtype=np.int64)
    bb = np.zeros(n, dtype=np.int64)
    aa[: len(a)] = a
    bb[: len(b)] = b
    return trim(F.add(aa, bb))


def sub(F, a, b):
    n = max(len(a), len(b))
    aa = np.zeros(n, dtype=np.int64)
    bb = np.zeros(n, dtype=np.int64)
    aa[: len(a)] = a
    bb[: len(b)] = b
    return trim(F.sub(aa, bb))


def mul(F, a, b):
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64)
    return trim(F.convolve(a, b))


def monic(F, f):
    if len(f) == 0:
        return f
    return trim(F.mul(F.inv(f[-1]), f))


def divmod_(F, a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return np.zeros(0, dtype=np.int64), a
    r = a.copy()
    inv_lead = F.inv(b[-1])
    q = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1 - db, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        q[i] = c
        r[i: i + db + 1] = F.sub(r[i: i + db + 1], F.mul(c, b))
    return trim(q), trim(r[:db])


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def gcd(F, a, b):
    """Monic greatest common divisor."""
    a, b = trim(a), trim(b)
    while len(b):
        a, b = b, mod(F, a, b)
    return monic(F, a)


def powmod(F, base, e: int, m):
    result = np.array([1], dtype=np.int64)
    base = mod(F, base, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return result if len(m) > 1 else np.zeros(0, dtype=np.int64)


def derivative(F, f):
    if len(f) <= 1:
        return np.zeros(0, dtype=np.int64)
    # the integer j < p is the field element with code j
    ks = np.arange(1, len(f)) % F.p
    return trim(F.mul(ks, f[1:]))


def evaluate(F, f, x):
    acc = np.int64(0)
    for c in f[::-1]:
        acc = F.add(F.mul(acc, x), c)
    return int(acc)


def squarefree_decomposition(F, f):
    """Return ``[(g, m), ...]`` with ``f == lc * prod g**m`` and each ``g`` squarefree."""
    f = monic(F, trim(f))
    if len(f) <= 1:
        return []
    out = []
    c = gcd(F, f, derivative(F, f))
    w = divmod_(F, f, c)[0]
    i = 1
    while not is_one(w):
        y = gcd(F, w, c)
        fac = divmod_(F, w, y)[0]
        if not is_one(fac):
            out.append((monic(F, fac), i))
        w = y
        c = divmod_(F, c, y)[0]
        i += 1
    if not is_one(c):
        root = F.frobenius_root(c[:: F.p])
        for g, m in squarefree_decomposition(F, root):
            out.append((g, m * F.p))
    return out


def distinct_degree(F, f, max_degree: int | None = None):
    """Split squarefree monic ``f`` into products of equal-degree irreducibles.

    Returns ``(parts, rest)``: ``parts`` is a list of ``(g, d)`` where ``g`` is the
    product of all irreducible factors of degree ``d``; ``rest`` collects the
    factors of degree above ``max_degree`` (``[1]`` when nothing is left).
    """
    parts = []
    fstar = f
    x = x_poly()
    h = x.copy()
    d = 1
    while len(fstar) - 1 >= 2 * d:
        if max_degree is not None and d > max_degree:
            return parts, fstar
        h = powmod(F, h, F.q, fstar)
        g = gcd(F, fstar, sub(F, h, x))
        if not is_one(g):
            parts.append((g, d))
            fstar = divmod_(F, fstar, g)[0]
            h = mod(F, h, fstar)
        d += 1
    if len(fstar) > 1:
        dd = len(fstar) - 1
        if max_degree is None or dd <= max_degree:
            parts.append((fstar, dd))
            fstar = np.array([1], dtype=np.int64)
    return parts, fstar


def equal_degree(F, g, d: int, rng: np.random.Generator | None = None):
    """Factor a squarefree monic product of degree-``d`` irreducibles."""
    n = len(g) - 1
    if n == d:
        return [g]
    if rng is None:
        rng = np.random.default_rng(_EDF_SEED)
    while True:
        a = trim(F.random(rng, n))
        if len(a) <= 1:
            continue
        if F.p == 2:
            b = _trace_map(F, a, d, g)
        else:
            e = (F.q ** d - 1) // 2
            b = sub(F, powmod(F, a, e, g), np.array([1], dtype=np.int64))
        h = gcd(F, g, b)
        if 1 <= len(h) - 1 < n:
            other = divmod_(F, g, h)[0]
            return equal_degree(F, h, d, rng) + equal_degree(F, monic(F, other), d, rng)


def _trace_map(F, a, d, g):
    # a + a^2 + a^4 + ... + a^(2^(k d - 1)) mod g
    total = mod(F, a, g)
    cur = total
    for _ in range(F.k * d - 1):
        cur = mod(F, mul(F, cur, cur), g)
        total = add(F, total, cur)
    return total


def _sort_key(f):
    return (len(f), tuple(int(c) for c in f[::-1]))


def poly_factor(F, f):
    """Factor a nonzero polynomial into monic irreducibles.

    Returns a list of ``(factor, multiplicity)`` sorted by degree and then by
    coefficients; the product equals ``f`` up to its leading coefficient.
    """
    f = trim(np.asarray(f, dtype=np.int64))
    if len(f) == 0:
        raise DomainError("cannot factor the zero polynomial")
    counts: dict[tuple, int] = {}
    rng = np.random.default_rng(_EDF_SEED)
    for g, m in squarefree_decomposition(F, f):
        parts, _ = distinct_degree(F, g)
        for h, d in parts:
            for irr in equal_degree(F, h, d, rng):
                key = tuple(int(c) for c in irr)
                counts[key] = counts.get(key, 0) + m
    out = [(np.array(k, dtype=np.int64), m) for k, m in counts.items()]
    out.sort(key=lambda t: _sort_key(t[0]))
    return out


def small_irreducible_factors(F, f, max_degree: int):
    """Distinct monic irreducible factors of ``f`` of degree at most ``max_degree``."""
    f = monic(F, trim(f))
    seen = {}
    rng = np.random.default_rng(_EDF_SEED)
    for g, _ in squarefree_decomposition(F, f):
        parts, _ = distinct_degree(F, g, max_degree)
        for h, d in parts:
            for irr in equal_degree(F, h, d, rng):
                seen[tuple(int(c) for c in irr)] = irr
    out = list(seen.values())
    out.sort(key=_sort_key)
    return out


def is_irreducible(F, f) -> bool:
    """Rabin's test for a polynomial of positive degree."""
    f = monic(F, trim(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = x_poly()
    primes = [r for r in range(2, n + 1) if n % r == 0 and all(r % s for s in range(2, r))]
    for r in primes:
        h = powmod(F, x, F.q ** (n // r), f)
        if not is_one(gcd(F, f, sub(F, h, x))):
            return False
    return len(sub(F, powmod(F, x, F.q ** n, f), x)) == 0


def least_irreducible(F, k: int) -> np.ndarray:
    """The monic irreducible of degree ``k`` whose lower-coefficient code is least."""
    for code in range(F.q ** k):
        coeffs = [(code // F.q ** i) % F.q for i in range(k)] + [1]
        f = np.array(coeffs, dtype=np.int64)
        if k > 1 and f[0] == 0:
            continue
        if is_irreducible(F, f):
            return f
    raise DomainError(f"no irreducible polynomial of degree {k}")  # pragma: no cover


def eval_matrix(F, f, A):
    """Evaluate polynomial ``f`` at the square matrix ``A`` (Horner's rule)."""
    n = A.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    eye = np.arange(n)
    for c in f[::-1]:
        out = F.matmul(out, A)
        out[eye, eye] = F.add(out[eye, eye], c)
    return out


def to_string(f, var: str = "x") -> str:
    if len(f) == 0:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = int(f[i])
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms)
