"""Permutations of {0, ..., n-1} and the text formats used to read them."""

from __future__ import annotations

import math
import re
from functools import reduce

from ..errors import MalformedInputError


class Permutation:
    """An immutable permutation given by its image array.

    Products compose left to right: ``(g * h)(i) == h(g(i))``, so ``g`` is
    applied first.  Conjugation follows the same convention,
    ``g ** h == h**-1 * g * h``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise MalformedInputError(f"image array {images} is not a bijection")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        self = object.__new__(cls)
        self.images = images
        self._hash = hash(images)
        return self

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 0 <= c < degree:
                    raise MalformedInputError(f"point {c} outside 0..{degree - 1}")
                if c in seen:
                    raise MalformedInputError(f"point {c} repeated in cycle notation")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls._trusted(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation._trusted(tuple(o[i] for i in self.images))

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    inverse = __invert__

    def __pow__(self, e):
        if isinstance(e, Permutation):
            return ~e * self * e
        if e < 0:
            return (~self) ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def extend(self, degree: int, shift: int = 0) -> "Permutation":
        """The same permutation moved by ``shift`` points inside a larger domain."""
        img = list(range(degree))
        for i, j in enumerate(self.images):
            img[i + shift] = j + shift
        return Permutation._trusted(tuple(img))

    def __repr__(self):
        return f"Permutation({self})"

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``(0 1)(2 3)``; ``()`` is the identity."""
    stripped = re.sub(r"\s+", " ", text).strip()
    if not stripped:
        raise MalformedInputError("empty permutation")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise MalformedInputError(f"cannot parse permutation {text!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(b) for b in body]
        except ValueError as exc:
            raise MalformedInputError(f"cannot parse permutation {text!r}") from exc
        if pts:
            cycles.append(pts)
        pos = m.end()
    if stripped[pos:].strip():
        raise MalformedInputError(f"cannot parse permutation {text!r}")
    return Permutation.from_cycles(degree, cycles)


def parse_group_text(text: str) -> tuple[int, list[Permutation]]:
    """Read the group text format: a ``degree: n`` line, then one generator per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise MalformedInputError("group text is empty")
    head = re.fullmatch(r"degree\s*:\s*(\d+)", lines[0].replace(" ", "").replace("\t", ""))
    if head is None:
        raise MalformedInputError(f"expected 'degree: n', got {lines[0]!r}")
    degree = int(head.group(1))
    return degree, [parse_cycles(line, degree) for line in lines[1:]]


def format_group_text(degree: int, gens) -> str:
    return "\n".join([f"degree: {degree}"] + [str(g) for g in gens]) + "\n"
