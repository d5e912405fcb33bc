"""Named group constructions.

A builder spec is ``name:args``; the recognized names are listed in
:data:`BUILDERS`.  Examples::

    sym:4   alt:5   cyclic:6   dihedral:4   sl2:8   frobenius:11,5
    fermat_example:3   mersenne_example:3   direct:[sym:3],[alt:5]   direct:alt:5,frobenius:11,5
    file:groups/m11.txt   gens:4:(0 1 2 3);(0 2)
"""

from __future__ import annotations

from pathlib import Path

from .errors import BuildError, DomainError, MalformedInputError
from .gflinalg.field import GF, is_prime, prime_power
from .permgrp.group import PermGroup
from .permgrp.perm import Permutation, parse_cycles, parse_group_text


def _int_arg(args: str, what: str) -> int:
    try:
        return int(args)
    except ValueError:
        raise BuildError(f"{what} expects an integer argument, got {args!r}") from None


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise BuildError("sym:n needs n >= 1")
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles(n, [list(range(n))]), Permutation.from_cycles(n, [(0, 1)])]
    return PermGroup(gens, degree=n, name=f"sym:{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise BuildError("alt:n needs n >= 1")
    gens = []
    if n >= 3:
        long = list(range(n)) if n % 2 else list(range(1, n))
        gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
        if n > 3:
            gens.append(Permutation.from_cycles(n, [long]))
    return PermGroup(gens, degree=n, name=f"alt:{n}")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise BuildError("cyclic:n needs n >= 1")
    gens = [Permutation.from_cycles(n, [list(range(n))])] if n > 1 else []
    return PermGroup(gens, degree=n, name=f"cyclic:{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on the n vertices of a polygon (n >= 3)."""
    if n < 3:
        raise BuildError("dihedral:n needs n >= 3 for a faithful action on n points")
    rot = Permutation.from_cycles(n, [list(range(n))])
    refl = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, refl], degree=n, name=f"dihedral:{n}")


def quaternion() -> PermGroup:
    """Quaternion group of order 8 in its regular representation."""
    # elements 1, i, j, k, -1, -i, -j, -k numbered 0..7; right multiplication
    table = {"i": {0: 1, 1: 4, 2: 7, 3: 2}, "j": {0: 2, 1: 3, 2: 4, 3: 5}}
    gens = []
    for t in table.values():
        img = [0] * 8
        for a, b in t.items():
            img[a] = b
            img[(a + 4) % 8] = (b + 4) % 8
        gens.append(Permutation(img))
    return PermGroup(gens, degree=8, name="quaternion")


def frobenius(p: int, r: int) -> PermGroup:
    """C_p semidirect C_r acting on GF(p) by x -> a x + b, with a of order r."""
    if not is_prime(p):
        raise BuildError(f"frobenius:p,r needs p prime, got {p}")
    if r < 1 or (p - 1) % r:
        raise BuildError(f"frobenius:{p},{r}: r must divide p - 1")
    a = pow(GF(p).generator, (p - 1) // r, p)
    gens = [Permutation([(x + 1) % p for x in range(p)])]
    if r > 1:
        gens.append(Permutation([(a * x) % p for x in range(p)]))
    return PermGroup(gens, degree=p, name=f"frobenius:{p},{r}")


def sl2(q: int) -> PermGroup:
    """SL(2, q) for even q acting on the q + 1 points of the projective line.

    Points are the field codes 0..q-1 and q for infinity.  For odd q the center
    acts trivially, so the action is not faithful and the build is refused.
    """
    try:
        pk = prime_power(q)
    except DomainError:
        raise BuildError(f"sl2:q needs a prime power, got {q}") from None
    if q % 2:
        raise BuildError(f"sl2:{q}: the action on the projective line is not faithful for odd q")
    F = GF(*pk)
    inf = q
    w = F.generator

    def mobius(a, b, c, d):
        # x -> (a x + b) / (c x + d)
        img = []
        for x in range(q + 1):
            if x == inf:
                num, den = a, c
            else:
                num = int(F.add(F.mul(a, x), b))
                den = int(F.add(F.mul(c, x), d))
            img.append(inf if den == 0 else int(F.div(num, den)))
        return Permutation(img)

    gens = [mobius(1, 1, 0, 1), mobius(w, 0, 0, int(F.inv(w))), mobius(0, 1, 1, 0)]
    return PermGroup(gens, degree=q + 1, name=f"sl2:{q}")


def affine_wreath(q: int, m: int, name: str) -> PermGroup:
    """AGL(1, q) wreath C_m: m blocks of q points, each carrying x -> a x + b, with the
    blocks permuted cyclically."""
    try:
        pk = prime_power(q)
    except DomainError:
        raise BuildError(f"{name}: {q} is not a prime power") from None
    F = GF(*pk)
    n = q * m
    trans = list(range(n))
    mult = list(range(n))
    for x in range(q):
        trans[x] = int(F.add(x, 1))
        mult[x] = int(F.mul(F.generator, x))
    gens = [Permutation(trans)]
    if q > 2:
        gens.append(Permutation(mult))
    if m > 1:
        gens.append(Permutation([(i + q) % n for i in range(n)]))
    return PermGroup(gens, degree=n, name=name)


def fermat_example(q: int) -> PermGroup:
    """N semidirect (C_{q-1} wreath C_2) with N elementary abelian of order q^2,
    realized as AGL(1, q) wreath C_2 on 2q points."""
    if not is_prime(q) or q < 3:
        raise BuildError(f"fermat_example:q needs an odd prime q, got {q}")
    return affine_wreath(q, 2, f"fermat_example:{q}")


def mersenne_example(p: int) -> PermGroup:
    """N semidirect (C_p wreath C_p) with N elementary abelian of order (p+1)^p,
    realized as AGL(1, p+1) wreath C_p on p(p+1) points."""
    if not is_prime(p) or p == 2 or (p + 1) & p:
        raise BuildError(f"mersenne_example:p needs a Mersenne prime p, got {p}")
    return affine_wreath(p + 1, p, f"mersenne_example:{p}")


def direct_product(groups, name: str | None = None) -> PermGroup:
    """Direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens = []
    shift = 0
    for G in groups:
        gens.extend(g.extend(degree, shift) for g in G.generators)
        shift += G.degree
    return PermGroup(gens, degree=degree, name=name)


def _split_top(args: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in args:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise BuildError(f"unbalanced brackets in {args!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise BuildError(f"unbalanced brackets in {args!r}")
    parts.append("".join(cur))
    out = []
    for part in parts:
        part = part.strip()
        if part.startswith("[") and part.endswith("]"):
            part = part[1:-1].strip()
        elif out and part[:1].isdigit():
            # unbracketed multi-argument spec such as frobenius:11,5
            out[-1] += "," + part
            continue
        out.append(part)
    return out


def _inline(args: str) -> PermGroup:
    head, _, body = args.partition(":")
    degree = _int_arg(head, "gens")
    try:
        gens = [parse_cycles(c, degree) for c in body.split(";") if c.strip()]
    except MalformedInputError as exc:
        raise BuildError(str(exc)) from exc
    return PermGroup(gens, degree=degree)


def _from_file(path: str, base_dir: Path | None) -> PermGroup:
    p = Path(path)
    if not p.is_absolute() and base_dir is not None:
        p = base_dir / p
    try:
        text = p.read_text()
    except OSError as exc:
        raise BuildError(f"cannot read group file {path!r}: {exc}") from exc
    degree, gens = parse_group_text(text)
    return PermGroup(gens, degree=degree)


BUILDERS = ("sym", "alt", "cyclic", "dihedral", "quaternion", "frobenius", "sl2",
            "fermat_example", "mersenne_example", "direct", "file", "gens")


def build(spec: str, base_dir: Path | None = None) -> PermGroup:
    """Build a permutation group from a builder spec (see the module docstring)."""
    spec = spec.strip()
    kind, _, args = spec.partition(":")
    kind = kind.strip()
    args = args.strip()
    if kind == "sym":
        G = symmetric(_int_arg(args, kind))
    elif kind == "alt":
        G = alternating(_int_arg(args, kind))
    elif kind == "cyclic":
        G = cyclic(_int_arg(args, kind))
    elif kind == "dihedral":
        G = dihedral(_int_arg(args, kind))
    elif kind == "quaternion":
        if args not in ("", "8"):
            raise BuildError("quaternion takes no argument (or 8)")
        G = quaternion()
    elif kind == "frobenius":
        vals = args.split(",")
        if len(vals) != 2:
            raise BuildError("frobenius expects p,r")
        G = frobenius(_int_arg(vals[0], kind), _int_arg(vals[1], kind))
    elif kind == "sl2":
        G = sl2(_int_arg(args, kind))
    elif kind == "fermat_example":
        G = fermat_example(_int_arg(args, kind))
    elif kind == "mersenne_example":
        G = mersenne_example(_int_arg(args, kind))
    elif kind == "direct":
        parts = _split_top(args)
        if len(parts) < 2 or not all(parts):
            raise BuildError("direct expects at least two comma-separated specs")
        G = direct_product([build(s, base_dir) for s in parts])
    elif kind == "file":
        G = _from_file(args, base_dir)
    elif kind == "gens":
        G = _inline(args)
    else:
        raise BuildError(f"unknown builder {kind!r}; known: {', '.join(BUILDERS)}")
    G.name = spec
    return G
