"""Permutations of {1..d} and transpositions.

Composition is left-to-right: ``compose(p, q)`` applies ``p`` first, then ``q``.
All indices are 1-based.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Transposition:
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"transposition needs two distinct points, got ({self.a} {self.b})")
        if min(self.a, self.b) < 1:
            raise ValueError("sheet indices are 1-based")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def support(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    def __call__(self, x: int) -> int:
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        return x

    def other(self, x: int) -> int:
        """The endpoint of ``self`` that is not ``x`` (``x`` must be in the support)."""
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        raise ValueError(f"{x} is not moved by {self}")

    def as_permutation(self, d: int) -> Permutation:
        if self.b > d:
            raise ValueError(f"{self} does not live in S_{d}")
        return Permutation(tuple(self(x) for x in range(1, d + 1)))

    def __str__(self):
        return f"({self.a} {self.b})"


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a bijection of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        image = list(range(1, d + 1))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                image[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(image))

    @property
    def d(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.d
        for x, y in enumerate(self.image, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image, start=1))

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in cycles(self)), reverse=True))

    def __str__(self):
        nontrivial = [c for c in cycles(self) if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.d != q.d:
        raise ValueError(f"degree mismatch: {p.d} != {q.d}")
    return Permutation(tuple(q(p(x)) for x in range(1, p.d + 1)))


def conjugate(t: Transposition, s: Transposition) -> Transposition:
    """Return s t s, i.e. ``t`` with its points relabelled by ``s``."""
    return Transposition(s(t.a), s(t.b))


def cycles(p: Permutation) -> list[list[int]]:
    """Disjoint cycles of ``p`` including fixed points, each starting at its
    minimum, sorted by minimum."""
    seen = set()
    out = []
    for start in range(1, p.d + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = p(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p(x)
        out.append(cyc)
    return out


def conjugate_in_sd(p: Permutation, q: Permutation) -> bool:
    if p.d != q.d:
        raise ValueError(f"degree mismatch: {p.d} != {q.d}")
    return Counter(map(len, cycles(p))) == Counter(map(len, cycles(q)))


def is_transitive(ts: Iterable[Transposition], d: int) -> bool:
    """Whether the graph on 1..d with one edge per transposition is connected."""
    parent = list(range(d + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = d
    for t in ts:
        if t.b > d:
            raise ValueError(f"{t} does not live in S_{d}")
        ra, rb = find(t.a), find(t.b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    return components == 1


_TRANSPOSITION_RE = re.compile(r"\(\s*(\d+)\s*[ ,]\s*(\d+)\s*\)")


def parse_transposition(text: str) -> Transposition:
    m = _TRANSPOSITION_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"cannot parse transposition {text!r}; expected '(a b)'")
    return Transposition(int(m.group(1)), int(m.group(2)))


def parse_permutation(text: str, d: int) -> Permutation:
    """Parse cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
    text = text.strip()
    if text in ("", "()"):
        return Permutation.identity(d)
    if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\)\s*)+", text):
        raise ValueError(f"cannot parse permutation {text!r}")
    cyc_list = [list(map(int, c.split())) for c in re.findall(r"\(([^)]*)\)", text)]
    points = [x for c in cyc_list for x in c]
    if len(points) != len(set(points)) or any(not 1 <= x <= d for x in points):
        raise ValueError(f"invalid cycle notation for degree {d}: {text!r}")
    # Cycles are applied left to right, consistent with compose().
    result = Permutation.identity(d)
    for c in cyc_list:
        result = compose(result, Permutation.from_cycles(d, [c]))
    return result
