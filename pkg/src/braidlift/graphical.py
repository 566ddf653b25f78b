"""Graphical objects: indexed arc systems on a fixed covering surface.

An arc is recorded by its homotopy class rel endpoints, i.e. a reduced path in
the free groupoid on the spine of the reference surface.  For arcs on a
surface with boundary this is the same as the isotopy class.  Arcs are
unoriented; every :class:`ArcWord` is normalised to run from its smaller
basepoint to its larger one, so dataclass equality is equality up to reversal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .braid import BraidError, BraidWord, LabelTuple
from .perm import Transposition
from .words import Word, abelianize, concat, format_path, int_det, invert_word, reduce_word


@dataclass(frozen=True)
class ArcWord:
    letters: Word
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            object.__setattr__(self, "letters", invert_word(self.letters))
            s, e = self.end, self.start
            object.__setattr__(self, "start", s)
            object.__setattr__(self, "end", e)

    def reversed_letters(self) -> Word:
        return invert_word(self.letters)

    def oriented_from(self, x: int) -> Word:
        """Letters of the arc read starting at endpoint ``x``."""
        if x == self.start:
            return self.letters
        if x == self.end:
            return invert_word(self.letters)
        raise ValueError(f"x{x} is not an endpoint of {self}")

    @property
    def label(self) -> Transposition:
        return Transposition(self.start, self.end)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_path(self.letters)


def trace_path(letters: Sequence[int], start: int, edges: Sequence[tuple[int, int]]) -> int:
    """Follow a path from ``start``; returns the end vertex or raises if it breaks."""
    here = start
    for x in letters:
        if not 1 <= abs(x) <= len(edges):
            raise ValueError(f"edge {abs(x)} does not exist")
        a, b = edges[abs(x) - 1]
        tail, head = (a, b) if x > 0 else (b, a)
        if here != tail:
            raise ValueError(f"path breaks at letter {x}: at x{here}, edge leaves x{tail}")
        here = head
    return here


def make_arc(letters: Sequence[int], start: int, edges: Sequence[tuple[int, int]]) -> ArcWord:
    letters = reduce_word(letters)
    return ArcWord(letters, start, trace_path(letters, start, edges))


@dataclass(frozen=True)
class GraphicalObject:
    reference: LabelTuple
    arcs: tuple[ArcWord, ...]
    _edges: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(self, "_edges", tuple((t.a, t.b) for t in self.reference))
        if len(self.arcs) != self.reference.n:
            raise ValueError(f"expected {self.reference.n} arcs, got {len(self.arcs)}")

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def to_json(self) -> dict:
        return {
            "reference": str(self.reference),
            "arcs": [{"word": str(a), "endpoints": [a.start, a.end]} for a in self.arcs],
        }

    def key(self) -> tuple:
        return tuple((a.start, a.end, a.letters) for a in self.arcs)

    def __str__(self):
        return "[" + "; ".join(f"{a.start}-{a.end}: {a}" for a in self.arcs) + "]"


def canonical_object(tau: LabelTuple) -> GraphicalObject:
    return GraphicalObject(tau, tuple(ArcWord((k,), t.a, t.b) for k, t in enumerate(tau, start=1)))


def label_of(obj: GraphicalObject) -> LabelTuple:
    return obj.reference._replace_labels(a.label for a in obj.arcs)


def _slide(a: ArcWord, b: ArcWord, sign: int) -> tuple[ArcWord, ArcWord]:
    shared = {a.start, a.end} & {b.start, b.end}
    if not shared:
        return b, a
    if len(shared) == 1:
        (v,) = shared
        u = a.end if a.start == v else a.start
        w = b.end if b.start == v else b.start
        if sign > 0:
            # u --a--> v --b--> w
            return ArcWord(concat(a.oriented_from(u), b.oriented_from(v)), u, w), a
        # w --b--> v --a--> u
        return b, ArcWord(concat(b.oriented_from(w), a.oriented_from(v)), w, u)
    # Equal labels: both stored u -> v with u < v.
    u, v = a.start, a.end
    if sign > 0:
        return ArcWord(concat(a.letters, b.reversed_letters(), a.letters), u, v), a
    return b, ArcWord(concat(b.letters, a.reversed_letters(), b.letters), u, v)


def apply_generator(obj: GraphicalObject, i: int, sign: int = 1) -> GraphicalObject:
    """Arcslide arc ``i+1`` along arc ``i`` at shared endpoints, then swap indices."""
    if not 1 <= i <= obj.n - 1:
        raise BraidError(f"generator index {i} out of range [1, {obj.n - 1}]")
    arcs = list(obj.arcs)
    arcs[i - 1], arcs[i] = _slide(arcs[i - 1], arcs[i], sign)
    return GraphicalObject(obj.reference, tuple(arcs))


def apply_morphism(obj: GraphicalObject, word: BraidWord) -> GraphicalObject:
    arcs = list(obj.arcs)
    for g in word:
        if not 1 <= g.index <= obj.n - 1:
            raise BraidError(f"generator index {g.index} out of range [1, {obj.n - 1}]")
        arcs[g.index - 1], arcs[g.index] = _slide(arcs[g.index - 1], arcs[g.index], g.sign)
    return GraphicalObject(obj.reference, tuple(arcs))


def objects_equal(o1: GraphicalObject, o2: GraphicalObject) -> bool:
    return o1.reference == o2.reference and o1.arcs == o2.arcs


@dataclass
class ValidationReport:
    condition1: bool
    condition2: bool
    paths_valid: bool
    reduced: bool
    determinant: int | None
    messages: list[str]

    @property
    def ok(self) -> bool:
        return self.condition1 and self.condition2 and self.paths_valid and self.reduced and self.determinant in (1, -1)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "endpoints_distinct": self.condition1,
            "basepoints_covered": self.condition2,
            "paths_valid": self.paths_valid,
            "reduced": self.reduced,
            "determinant": self.determinant,
            "messages": self.messages,
        }


def validate_object(obj: GraphicalObject) -> ValidationReport:
    """Check the arc-system axioms that are decidable from words.

    Distinct endpoints and basepoint coverage are checked exactly.  Cutting the
    surface into discs is checked through two necessary conditions: every arc
    is a valid reduced path, and the abelianised arcs form a unimodular matrix.
    The vertex-order axiom holds by construction (index order).
    """
    msgs = []
    edges = obj.edges
    cond1 = all(a.start != a.end for a in obj.arcs)
    if not cond1:
        msgs.append("an arc has equal endpoints")
    covered = {x for a in obj.arcs for x in (a.start, a.end)}
    missing = sorted(set(range(1, obj.reference.d + 1)) - covered)
    cond2 = not missing
    if missing:
        msgs.append(f"basepoints not covered: {missing}")
    paths_ok = True
    for k, a in enumerate(obj.arcs, start=1):
        try:
            end = trace_path(a.letters, a.start, edges)
        except ValueError as exc:
            paths_ok = False
            msgs.append(f"arc {k}: {exc}")
            continue
        if end != a.end:
            paths_ok = False
            msgs.append(f"arc {k} ends at x{end}, expected x{a.end}")
    reduced = all(reduce_word(a.letters) == a.letters for a in obj.arcs)
    if not reduced:
        msgs.append("an arc word is not freely reduced")
    det = int_det([abelianize(a.letters, obj.n) for a in obj.arcs])
    if det not in (1, -1):
        msgs.append(f"abelianised arcs have determinant {det}")
    return ValidationReport(cond1, cond2, paths_ok, reduced, det, msgs)
