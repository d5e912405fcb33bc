"""Finite fields GF(p^k) acting on numpy arrays of integer element codes.

An element of GF(p^k) is encoded as the integer ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` is its residue modulo the defining
polynomial.  For ``k == 1`` the code is simply the residue mod ``p``.  All
arithmetic methods accept and return ``int64`` arrays (or scalars) of codes.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..errors import DomainError

# exact float64 matmul is used while every partial sum stays below 2**53
_FLOAT_EXACT = 2 ** 52

_TABLE_LIMIT = 2 ** 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise DomainError otherwise."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise DomainError(f"{q} is not a prime power")
    return p, k


class GF:
    """The finite field GF(p^k) with a deterministic defining polynomial.

    The modulus is the monic irreducible polynomial of degree ``k`` whose code
    ``sum(c_i p^i for i < k)`` is least.  Fields are cached, so ``GF(2, 2) is GF(2, 2)``.
    """

    def __new__(cls, p: int, k: int = 1):
        return _make_field(p, k)

    @classmethod
    def _create(cls, p: int, k: int) -> "GF":
        if not is_prime(p):
            raise DomainError(f"characteristic {p} is not prime")
        if k < 1:
            raise DomainError("extension degree must be positive")
        self = object.__new__(cls)
        self.p = p
        self.k = k
        self.q = p ** k
        if self.q > _TABLE_LIMIT and k > 1:
            raise DomainError(f"GF({p}^{k}) exceeds the log-table limit {_TABLE_LIMIT}")
        self._weights = p ** np.arange(k, dtype=np.int64)
        if k == 1:
            self.modulus = (0, 1)
            self._inv_table = None
            if p <= _TABLE_LIMIT:
                inv = np.zeros(p, dtype=np.int64)
                for a in range(1, p):
                    inv[a] = pow(a, p - 2, p)
                self._inv_table = inv
            self.generator = next(
                (g for g in range(2, p) if all(pow(g, (p - 1) // r, p) != 1 for r in prime_factors(p - 1))),
                1)
        else:
            from .poly import least_irreducible

            self.modulus = tuple(int(c) for c in least_irreducible(GF(p), k))
            self._build_tables()
        return self

    # -- construction helpers -------------------------------------------------

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        digits = np.zeros((q, k), dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        for i in range(k):
            digits[:, i] = (codes // p ** i) % p
        self._digits = digits
        # x^t mod modulus for t < 2k-1, as digit vectors
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        cur = np.zeros(k, dtype=np.int64)
        cur[0] = 1
        low = np.array(self.modulus[:k], dtype=np.int64)
        for t in range(2 * k - 1):
            red[t] = cur
            top = cur[k - 1]
            cur = np.roll(cur, 1)
            cur[0] = 0
            cur = (cur - top * low) % p
        self._red = red
        gen = self._find_generator()
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[q - 1:] = exp[: q - 1]
        self._exp = exp
        self._log = log
        self.generator = gen

    def _slow_mul(self, a: int, b: int) -> int:
        da = self._digits[a]
        db = self._digits[b]
        prod = np.convolve(da, db) % self.p
        out = (prod[:, None] * self._red[: len(prod)]).sum(axis=0) % self.p
        return int(out @ self._weights)

    def _find_generator(self) -> int:
        q = self.q
        n = q - 1
        factors = prime_factors(n)
        for g in range(2, q):
            ok = True
            for r in factors:
                if self._slow_pow(g, n // r) == 1:
                    ok = False
                    break
            if ok:
                return g
        return 1  # only reached for q == 2

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    # -- descriptive ----------------------------------------------------------

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p, self.k))

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def asarray(self, a) -> np.ndarray:
        arr = np.asarray(a, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise DomainError(f"codes outside 0..{self.q - 1}")
        return arr

    def from_digits(self, digits) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self._weights

    def to_digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return a[..., None]
        return self._digits[a]

    # -- elementwise arithmetic -----------------------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._weights

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return ((-self._digits[a]) % self.p) @ self._weights

    def sub(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return ((self._digits[a] - self._digits[b]) % self.p) @ self._weights

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            if self._inv_table is not None:
                return self._inv_table[a]
            return np.vectorize(lambda x: pow(int(x), self.p - 2, self.p))(a).astype(np.int64)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return np.vectorize(lambda x: pow(int(x), e, self.p), otypes=[np.int64])(a)
        if e == 0:
            return np.ones_like(a)
        out = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def scale(self, c: int, a):
        """Multiply the array ``a`` by the scalar ``c``."""
        return self.mul(np.int64(c), a)

    # -- linear algebra kernels ------------------------------------------------

    def matmul(self, A, B) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return _prime_matmul(A, B, self.p)
        k, p = self.k, self.p
        Ad = self._digits[A]
        Bd = self._digits[B]
        planes = [None] * (2 * k - 1)
        for i in range(k):
            for j in range(k):
                prod = _prime_matmul(Ad[..., i], Bd[..., j], p, reduce=False)
                planes[i + j] = prod if planes[i + j] is None else planes[i + j] + prod
        shape = planes[0].shape
        out = np.zeros(shape + (k,), dtype=np.int64)
        for t in range(2 * k - 1):
            out += (planes[t] % p)[..., None] * self._red[t]
        return (out % p) @ self._weights

    def convolve(self, a, b) -> np.ndarray:
        """Coefficient convolution of two 1-d code arrays (polynomial product)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.size == 0 or b.size == 0:
            return np.zeros(0, dtype=np.int64)
        if self.k == 1:
            return _prime_convolve(a, b, self.p)
        k, p = self.k, self.p
        Ad = self._digits[a]
        Bd = self._digits[b]
        n = a.size + b.size - 1
        out = np.zeros((n, k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                c = _prime_convolve(Ad[:, i], Bd[:, j], p)
                t = i + j
                out += c[:, None] * self._red[t]
        return (out % p) @ self._weights

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return rng.integers(0, self.q, size=shape, dtype=np.int64)

    def frobenius_root(self, a):
        """The unique p-th root of ``a`` (the inverse Frobenius)."""
        if self.k == 1:
            return np.asarray(a, dtype=np.int64)
        return self.pow(a, self.p ** (self.k - 1))


@lru_cache(maxsize=None)
def _make_field(p: int, k: int) -> GF:
    return GF._create(p, k)


def _prime_matmul(A, B, p, reduce=True):
    inner = A.shape[-1] if A.ndim else 1
    if inner * (p - 1) ** 2 < _FLOAT_EXACT:
        out = np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64)
    else:
        out = A @ B
    return out % p if reduce else out


def _prime_convolve(a, b, p):
    if min(a.size, b.size) * (p - 1) ** 2 < 2 ** 62:
        return np.convolve(a, b) % p
    return np.array([int(x) % p for x in np.convolve(a.astype(object), b.astype(object))],
                    dtype=np.int64)
