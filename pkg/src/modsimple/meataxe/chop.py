"""Chopping modules into composition factors.

Irreducibility is decided by the Holt-Rees form of Norton's criterion: pick a
random element ``a`` of the group algebra and an irreducible factor ``f`` of its
characteristic polynomial with ``dim ker f(a) == deg f``.  If a vector of that
kernel spins to the whole module, and a kernel vector of ``f(a)^T`` spins to the
whole dual module, the module is irreducible.  Any proper spin gives a
submodule to split along.

The kernel vector of a certified simple also gives a standard basis, which is
used to compute homomorphism spaces (isomorphism tests, endomorphism fields,
and fast splitting of modules that contain an already known simple).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import PreconditionError
from ..gflinalg import matrix as mx
from ..gflinalg import poly as P
from ..gflinalg.field import GF
from .module import GModule, split_module, submodule_action

MAX_TRIES = 400
MAX_FACTOR_DEGREE = 12


@dataclass(frozen=True)
class AlgebraWord:
    """A replayable recipe for an element of the group algebra.

    ``products`` extends the pool ``[I, g_0, g_1, ...]`` by products of earlier
    pool entries; the element is ``sum(c * pool[i] for i, c in terms)``.
    """

    products: tuple[tuple[int, int], ...]
    terms: tuple[tuple[int, int], ...]

    def evaluate(self, F: GF, mats, dim: int = 0) -> np.ndarray:
        n = mats[0].shape[0] if mats else dim
        pool = [mx.identity(n)] + list(mats)
        for i, j in self.products:
            pool.append(F.matmul(pool[i], pool[j]))
        out = mx.zeros(n, n)
        for i, c in self.terms:
            out = F.add(out, F.mul(np.int64(c), pool[i]))
        return out


def random_algebra_word(F: GF, ngens: int, rng: np.random.Generator, extra: int) -> AlgebraWord:
    products = []
    size = ngens + 1
    for _ in range(extra):
        if ngens == 0:
            break
        i = int(rng.integers(1, size))
        j = int(rng.integers(1, ngens + 1))
        products.append((i, j))
        size += 1
    count = int(rng.integers(1, min(size, 4) + 1))
    chosen = rng.choice(size, size=count, replace=False)
    terms = tuple((int(i), int(rng.integers(1, F.q))) for i in sorted(chosen))
    return AlgebraWord(tuple(products), terms)


@dataclass(eq=False)
class SimpleModule:
    """A module certified irreducible over its ground field.

    ``basis`` is the standard basis obtained by spinning ``vector`` (row ``i``
    produced by ``steps``); ``conj`` holds the generators written in that basis.
    ``e`` is the dimension of the endomorphism algebra over the ground field.
    """

    module: GModule
    word: AlgebraWord
    factor: np.ndarray
    vector: np.ndarray
    steps: tuple
    basis: np.ndarray
    conj: list
    e: int = 0
    fingerprint: tuple = field(default=())

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def abs_dim(self) -> int:
        return self.module.dim // self.e


@dataclass(frozen=True)
class SimpleRecord:
    d: int
    e: int
    abs_dim: int
    multiplicity_in_source: int


def _batched_script(F: GF, N: np.ndarray, mats, steps, d: int) -> np.ndarray:
    """Replay a spinning script on every row of ``N`` at once: shape ``(k, d, n)``."""
    k, n = N.shape
    W = np.zeros((d, k, n), dtype=np.int64)
    W[0] = N
    for t, (src, gi) in enumerate(steps, start=1):
        W[t] = F.matmul(W[src], mats[gi])
    return W.transpose(1, 0, 2)


def hom_space(S: SimpleModule, T_mats, limit: int | None = None, dim: int | None = None) -> list[np.ndarray]:
    """Basis of Hom(S, T) as ``dim S x dim T`` matrices (``x -> x @ phi``).

    Every homomorphism is determined by the image ``w`` of the certificate
    vector, and ``w`` lies in the kernel of ``f(a)`` on ``T``; the conditions
    for the induced map to commute with the generators are linear in ``w``.
    """
    F = S.module.field
    d = S.dim
    n = T_mats[0].shape[0] if T_mats else (dim or 0)
    if n == 0:
        return []
    aT = S.word.evaluate(F, T_mats, n)
    N = mx.left_nullspace(F, P.eval_matrix(F, S.factor, aT))
    if N.shape[0] == 0:
        return []
    W = _batched_script(F, N, T_mats, S.steps, d)  # (k, d, n)
    k = W.shape[0]
    blocks = []
    for Gs, gT in zip(S.conj, T_mats):
        left = F.matmul(Gs, W.transpose(1, 0, 2).reshape(d, k * n)).reshape(d, k, n).transpose(1, 0, 2)
        right = F.matmul(W.reshape(k * d, n), gT).reshape(k, d, n)
        blocks.append(F.sub(left, right).reshape(k, d * n))
    if blocks:
        K = np.hstack(blocks)
        C = mx.left_nullspace(F, K)
    else:
        C = mx.identity(k)
    if limit is not None:
        C = C[:limit]
    Binv = mx.inverse(F, S.basis)
    out = []
    for c in C:
        Wc = F.matmul(c[None, :], W.reshape(k, d * n)).reshape(d, n)
        out.append(F.matmul(Binv, Wc))
    return out


def is_isomorphic(S: SimpleModule, T: SimpleModule) -> bool:
    if S.dim != T.dim or S.module.field is not T.module.field:
        return False
    if S.fingerprint and T.fingerprint and S.fingerprint != T.fingerprint:
        return False
    return bool(hom_space(S, T.module.action, limit=1, dim=T.dim))


@dataclass
class TestOutcome:
    irreducible: bool
    submodule: np.ndarray | None = None
    certificate: tuple | None = None
    tries: int = 0


def irreducibility_test(F: GF, mats, rng: np.random.Generator, dim: int | None = None) -> TestOutcome:
    """Norton / Holt-Rees test.  Returns either a proper submodule basis or a
    certificate ``(word, f, v, script)`` of irreducibility."""
    n = mats[0].shape[0] if mats else dim
    if n == 1:
        word = AlgebraWord((), ((0, 1),))
        v = np.ones(1, dtype=np.int64)
        return TestOutcome(True, certificate=(word, P.poly([F.neg(1), 1]), v,
                                              mx.SpinScript(v[None, :], ())))
    if not mats:
        # no generators: every subspace is invariant
        S = mx.zeros(1, n)
        S[0, 0] = 1
        return TestOutcome(False, submodule=S)
    matsT = [g.T.copy() for g in mats]
    for attempt in range(1, MAX_TRIES + 1):
        word = random_algebra_word(F, len(mats), rng, extra=min(attempt, 6))
        a = word.evaluate(F, mats)
        cp = mx.charpoly(F, a)
        factors = P.small_irreducible_factors(F, cp, MAX_FACTOR_DEGREE)
        for f in factors:
            fa = P.eval_matrix(F, f, a)
            N = mx.left_nullspace(F, fa)
            v = N[0]
            S = mx.spin(F, v, mats)
            if S.shape[0] < n:
                return TestOutcome(False, submodule=S, tries=attempt)
            Nt = mx.nullspace(F, fa)
            w = Nt[0]
            St = mx.spin(F, w, matsT)
            if St.shape[0] < n:
                U = mx.nullspace(F, St)
                return TestOutcome(False, submodule=U, tries=attempt)
            if N.shape[0] == P.degree(f):
                script = mx.spin_script(F, v, mats)
                return TestOutcome(True, certificate=(word, f, v, script), tries=attempt)
            # the kernel is too large for a single vector to decide; try the
            # remaining kernel vectors for a quick split before moving on
            for extra in N[1:4]:
                S = mx.spin(F, extra, mats)
                if S.shape[0] < n:
                    return TestOutcome(False, submodule=S, tries=attempt)
    raise RuntimeError(f"irreducibility test undecided after {MAX_TRIES} algebra elements")


def make_simple(M: GModule, certificate) -> SimpleModule:
    F = M.field
    word, f, v, script = certificate
    B = script.basis
    Binv = mx.inverse(F, B)
    conj = [F.matmul(F.matmul(B, g), Binv) for g in M.action]
    S = SimpleModule(M, word, f, v, script.steps, B, conj)
    S.e = len(hom_space(S, M.action, dim=M.dim))
    return S


def endo_field_degree(M: GModule, seed: int = 0) -> int:
    """Dimension over the ground field of End(M) for an irreducible module ``M``."""
    out = irreducibility_test(M.field, M.action, np.random.default_rng(seed), M.dim)
    if not out.irreducible:
        raise PreconditionError("module is reducible", failing=("irreducible",))
    return make_simple(M, out.certificate).e


@dataclass
class ChopResult:
    factors: list  # list of [SimpleModule, multiplicity]
    dim: int

    def records(self) -> list[SimpleRecord]:
        return [SimpleRecord(S.dim, S.e, S.abs_dim, m) for S, m in self.factors]


def chop_module(M: GModule, known: list | None = None, rng: np.random.Generator | None = None,
                fingerprint=None) -> ChopResult:
    """Composition factors of ``M`` with multiplicities.

    ``known`` is a list of :class:`SimpleModule` that is extended in place with
    new simples; factors isomorphic to a known simple are reported as that simple.
    ``fingerprint`` (optional) maps a GModule to an isomorphism invariant.
    """
    F = M.field
    rng = rng if rng is not None else np.random.default_rng(0)
    known = known if known is not None else []
    counts: dict[int, int] = {}
    stack = [M.action if M.dim else None]
    dims = [M.dim]
    while stack:
        mats = stack.pop()
        n = dims.pop()
        if n == 0:
            continue
        module = GModule(F, mats, M.group, n)
        hit = _peel_known(F, mats, n, known)
        if hit is not None:
            idx, sub_basis = hit
            counts[id(known[idx])] = counts.get(id(known[idx]), 0) + 1
            if sub_basis is not None:
                B, piv = mx.echelon_basis(F, sub_basis)
                _, quo = submodule_action(F, mats, B, piv)
                stack.append(quo)
                dims.append(n - len(piv))
            continue
        out = irreducibility_test(F, mats, rng, n)
        if out.irreducible:
            S = make_simple(module, out.certificate)
            if fingerprint is not None:
                S.fingerprint = fingerprint(S)
            match = next((T for T in known if is_isomorphic(T, S)), None)
            if match is None:
                known.append(S)
                match = S
            counts[id(match)] = counts.get(id(match), 0) + 1
            continue
        sub, quo = split_module(module, out.submodule)
        stack.append(sub.action)
        dims.append(sub.dim)
        stack.append(quo.action)
        dims.append(quo.dim)
    factors = [[S, counts[id(S)]] for S in known if id(S) in counts]
    total = sum(S.dim * m for S, m in factors)
    if total != M.dim:  # pragma: no cover - bookkeeping guard
        raise AssertionError(f"composition factors add up to {total}, expected {M.dim}")
    return ChopResult(factors, M.dim)


def _peel_known(F, mats, n, known):
    """Find a known simple embedded in the module; return its index and image basis
    (``None`` when the whole module is that simple)."""
    for idx in sorted(range(len(known)), key=lambda i: -known[i].dim):
        S = known[idx]
        if S.dim > n:
            continue
        homs = hom_space(S, mats, limit=1, dim=n)
        if homs:
            return idx, (None if S.dim == n else homs[0])
    return None


def chop(M: GModule, seed: int = 0) -> list[SimpleRecord]:
    """Composition factors of ``M`` as :class:`SimpleRecord` entries."""
    return chop_module(M, rng=np.random.default_rng(seed)).records()
