"""Coloured braids: label tuples, braid words and the Hurwitz action.

Braid words are stored in application order: the first generator listed acts
first.  Composition notation that writes ``s2 s1`` for "apply s1, then s2" must
be reversed before it is handed to :func:`parse_braid`.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import (
    Permutation,
    Transposition,
    compose,
    conjugate,
    conjugate_in_sd,
    is_transitive,
    parse_transposition,
)
from .words import artin_images


class BraidError(ValueError):
    """Malformed braid word, label tuple or out-of-range generator."""


@dataclass(frozen=True, order=True)
class LabelTuple:
    labels: tuple[Transposition, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) < 2:
            raise BraidError("need at least two branch values")
        if self.d < 3:
            raise BraidError("simple covers here have degree at least 3")
        for t in self.labels:
            if t.b > self.d:
                raise BraidError(f"label {t} is not in S_{self.d}")
        if not is_transitive(self.labels, self.d):
            raise BraidError(f"labels {format_labels(self.labels)} do not give a connected {self.d}-fold cover")

    @property
    def n(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> Transposition:
        """1-based access to the label of branch value ``i``."""
        return self.labels[i - 1]

    def __iter__(self) -> Iterator[Transposition]:
        return iter(self.labels)

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple((t.a, t.b) for t in self.labels)

    def __str__(self):
        return format_labels(self.labels)

    def _replace_labels(self, labels) -> LabelTuple:
        # Hurwitz moves preserve transitivity; skip revalidation.
        new = object.__new__(LabelTuple)
        object.__setattr__(new, "labels", tuple(labels))
        object.__setattr__(new, "d", self.d)
        return new


@dataclass(frozen=True)
class BraidGenerator:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise BraidError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise BraidError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> BraidGenerator:
        return BraidGenerator(self.index, -self.sign)

    def __str__(self):
        return f"s{self.index}" if self.sign > 0 else f"s{self.index}^-1"


@dataclass(frozen=True)
class BraidWord:
    gens: tuple[BraidGenerator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))

    @classmethod
    def of(cls, *pairs: int | tuple[int, int]) -> BraidWord:
        """``BraidWord.of(1, (2, -1))`` is s1 followed by s2^-1."""
        gens = []
        for p in pairs:
            if isinstance(p, tuple):
                gens.append(BraidGenerator(*p))
            else:
                gens.append(BraidGenerator(abs(p), 1 if p > 0 else -1))
        return cls(tuple(gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __add__(self, other: BraidWord) -> BraidWord:
        """Concatenation: ``self`` acts first."""
        return BraidWord(self.gens + other.gens)

    def __mul__(self, k: int) -> BraidWord:
        return BraidWord(self.gens * k)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(g.inverse() for g in reversed(self.gens)))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((g.index, g.sign) for g in self.gens)

    def max_index(self) -> int:
        return max((g.index for g in self.gens), default=0)

    def __str__(self):
        return " ".join(map(str, self.gens))


@dataclass(frozen=True)
class ColoredBraid:
    initial: LabelTuple
    word: BraidWord

    def __post_init__(self):
        if self.word.max_index() > self.initial.n - 1:
            raise BraidError(f"generator index {self.word.max_index()} out of range for {self.initial.n} strands")

    @property
    def terminal(self) -> LabelTuple:
        return hurwitz_apply(self.initial, self.word)

    def crossings(self) -> Iterator[tuple[int, BraidGenerator, Transposition, Transposition]]:
        """Yield ``(position, generator, left label, right label)`` before each crossing."""
        tau = self.initial
        for k, g in enumerate(self.word):
            yield k, g, tau[g.index], tau[g.index + 1]
            tau = hurwitz_step(tau, g.index, g.sign)


_GEN_RE = re.compile(r"s(\d+)(?:\^(-?\d+))?")


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse ``"s1 s2^-1 s1^3"``; exponents expand to repeated generators."""
    gens = []
    for tok in text.split():
        m = _GEN_RE.fullmatch(tok)
        if m is None:
            raise BraidError(f"syntax error in braid word at {tok!r}")
        i = int(m.group(1))
        if not 1 <= i <= n - 1:
            raise BraidError(f"generator index {i} out of range [1, {n - 1}]")
        e = int(m.group(2)) if m.group(2) is not None else 1
        gens.extend([BraidGenerator(i, 1 if e > 0 else -1)] * abs(e))
    return BraidWord(tuple(gens))


def parse_labels(text: str, d: int | None = None) -> LabelTuple:
    """Parse ``"(1 2),(2 3)"``, optionally preceded by a ``d=<int>`` header.

    An explicit ``d`` argument must agree with the header when both are given.
    """
    text = text.strip()
    m = re.match(r"d\s*=\s*(\d+)\s*[;:]?\s*", text)
    if m:
        header = int(m.group(1))
        if d is not None and d != header:
            raise BraidError(f"degree mismatch: header d={header}, argument d={d}")
        d = header
        text = text[m.end():]
    if d is None:
        raise BraidError("degree d not given")
    items = re.findall(r"\([^)]*\)", text)
    leftover = re.sub(r"\([^)]*\)", "", text).replace(",", "").strip()
    if not items or leftover:
        raise BraidError(f"cannot parse label tuple {text!r}")
    try:
        labels = tuple(parse_transposition(s) for s in items)
    except ValueError as exc:
        raise BraidError(str(exc)) from exc
    return LabelTuple(labels, d)


def format_labels(labels: Iterable[Transposition]) -> str:
    return ",".join(str(t) for t in labels)


def _step(labels: Sequence[Transposition], i: int, sign: int) -> tuple[Transposition, ...]:
    out = list(labels)
    a, b = labels[i - 1], labels[i]
    if sign > 0:
        out[i - 1], out[i] = conjugate(b, a), a
    else:
        out[i - 1], out[i] = b, conjugate(a, b)
    return tuple(out)


def hurwitz_step(tau: LabelTuple, i: int, sign: int = 1) -> LabelTuple:
    if not 1 <= i <= tau.n - 1:
        raise BraidError(f"generator index {i} out of range [1, {tau.n - 1}]")
    return tau._replace_labels(_step(tau.labels, i, sign))


def hurwitz_apply(tau: LabelTuple, word: BraidWord) -> LabelTuple:
    labels = tau.labels
    for g in word:
        if g.index > tau.n - 1:
            raise BraidError(f"generator index {g.index} out of range [1, {tau.n - 1}]")
        labels = _step(labels, g.index, g.sign)
    return tau._replace_labels(labels)


def is_liftable(b: ColoredBraid) -> bool:
    return b.terminal == b.initial


def total_monodromy(tau: LabelTuple) -> Permutation:
    """Left-to-right product t1 t2 ... tn."""
    return functools.reduce(compose, (t.as_permutation(tau.d) for t in tau), Permutation.identity(tau.d))


def mp_patterns(d: int, n: int) -> Iterator[tuple[Transposition, ...]]:
    """All tuples of length ``n`` of the form (12)((12))(23)((23))...(d-1 d)^odd."""
    for copies in itertools.product((1, 2), repeat=d - 2):
        last = n - sum(copies)
        if last < 1 or last % 2 == 0:
            continue
        labels = []
        for j, c in enumerate(copies, start=1):
            labels.extend([Transposition(j, j + 1)] * c)
        labels.extend([Transposition(d - 1, d)] * last)
        yield tuple(labels)


def canonical_label(tau: LabelTuple) -> LabelTuple:
    """The normal-form label with the same length and conjugate total monodromy.

    Several normal-form patterns can share a cycle type (for d >= 5); the
    lexicographically smallest is returned so the answer depends only on the
    cycle type of the total monodromy and on ``n``.
    """
    target = total_monodromy(tau)
    matches = []
    for labels in mp_patterns(tau.d, tau.n):
        cand = LabelTuple(labels, tau.d)
        if conjugate_in_sd(total_monodromy(cand), target):
            matches.append(cand)
    if not matches:
        raise BraidError(f"no normal-form label of length {tau.n} matches {tau}")
    return min(matches, key=LabelTuple.key)


def equivalent_covers(tau1: LabelTuple, tau2: LabelTuple) -> bool:
    if tau1.n != tau2.n or tau1.d != tau2.d:
        raise BraidError("label tuples differ in n or d")
    return conjugate_in_sd(total_monodromy(tau1), total_monodromy(tau2))


def orbit(tau: LabelTuple, with_edges: bool = False):
    """Hurwitz orbit of ``tau``, sorted by serialization.

    With ``with_edges`` also returns the list of ``(src, i, sign, dst)`` for every
    vertex and every signed generator, in the same deterministic order.
    """
    seen = {tau}
    queue = deque([tau])
    while queue:
        cur = queue.popleft()
        for i in range(1, tau.n):
            for sign in (1, -1):
                nxt = hurwitz_step(cur, i, sign)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    verts = sorted(seen, key=LabelTuple.key)
    if not with_edges:
        return verts
    edges = [
        (v, i, sign, hurwitz_step(v, i, sign))
        for v in verts
        for i in range(1, tau.n)
        for sign in (1, -1)
    ]
    return verts, edges


def braids_equal(w1: BraidWord, w2: BraidWord, n: int) -> bool:
    """Equality in B_n, decided by Artin's faithful action on the free group."""
    return artin_images(w1.pairs(), n) == artin_images(w2.pairs(), n)


class RewriteError(BraidError):
    """Same-label crossing removal gave up within its depth bound."""


_LOCAL_MAX_LEN = 7


def _clean_local(labels, gens) -> bool:
    for i, sign in gens:
        if labels[i - 1] == labels[i]:
            return False
        labels = _step(labels, i, sign)
    return True


@functools.lru_cache(maxsize=None)
def _local_replacement(window: tuple[Transposition, Transposition, Transposition], pos: int, sign: int):
    """Shortest 3-strand word equal to s_pos^sign whose crossings all have distinct labels.

    ``window`` holds the labels of the three strands; ``pos`` is 1 or 2.  Returned
    generator indices are relative to the window.
    """
    letters = [(1, 1), (1, -1), (2, 1), (2, -1)]
    target = artin_images([(pos, sign)], 3)
    for length in range(1, _LOCAL_MAX_LEN + 1):
        for w in itertools.product(letters, repeat=length):
            if any(w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1] for k in range(length - 1)):
                continue
            if _clean_local(window, w) and artin_images(w, 3) == target:
                return w
    return None


def _clean_generator(labels, i: int, sign: int, depth: int) -> list[tuple[int, int]]:
    t = labels[i - 1]
    if t != labels[i]:
        return [(i, sign)]
    if depth <= 0:
        raise RewriteError(f"depth bound reached rewriting s{i}^{sign} at labels {format_labels(labels)}")
    n = len(labels)
    helpers = [
        k for k in range(1, n + 1)
        if k not in (i, i + 1) and labels[k - 1] != t and labels[k - 1].support & t.support
    ]
    if not helpers:
        raise RewriteError(f"no strand can be pulled through the crossing s{i} at labels {format_labels(labels)}")
    # nearest helper, ties to the right
    k = min(helpers, key=lambda k: (i - k if k < i else k - i - 1, k < i))
    if k > i + 1:
        conj = [(j, 1) for j in range(k - 1, i + 1, -1)]
        offset = i - 1
    else:
        conj = [(j, 1) for j in range(k, i - 1)]
        offset = i - 2
    plan = conj + [None] + [(j, -s) for j, s in reversed(conj)]

    out: list[tuple[int, int]] = []
    cur = tuple(labels)
    for item in plan:
        if item is None:
            window = cur[offset:offset + 3]
            local = _local_replacement(window, i - offset, sign)
            if local is None:
                raise RewriteError(f"no local replacement for s{i}^{sign} at labels {format_labels(cur)}")
            pieces = [(j + offset, s) for j, s in local]
        else:
            pieces = [item]
        for j, s in pieces:
            seg = _clean_generator(cur, j, s, depth - 1)
            for jj, ss in seg:
                cur = _step(cur, jj, ss)
            out.extend(seg)
    return out


def remove_same_label_crossings(b: ColoredBraid, max_depth: int = 6) -> ColoredBraid:
    """An equivalent coloured braid in which no crossing joins two equal labels.

    Each offending crossing is replaced by a conjugate: the nearest strand whose
    label shares exactly one sheet with the crossing label is moved next to it,
    a short certified 3-strand word replaces the crossing, and the helper strand
    is moved back.  New offending crossings are rewritten recursively, up to
    ``max_depth`` levels.
    """
    labels = b.initial.labels
    out: list[tuple[int, int]] = []
    for g in b.word:
        seg = _clean_generator(labels, g.index, g.sign, max_depth)
        for j, s in seg:
            labels = _step(labels, j, s)
        out.extend(seg)
    return ColoredBraid(b.initial, BraidWord.of(*out))


def same_label_crossings(b: ColoredBraid) -> list[int]:
    """Positions in the word where the two crossing strands carry equal labels."""
    return [k for k, _g, left, right in b.crossings() if left == right]
