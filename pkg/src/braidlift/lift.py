"""Lifts of coloured braids to the covering surfaces.

The lift of a braid from the surface over ``tau`` to the surface over
``beta . tau`` is recorded as a substitution between spine groupoids: for every
edge of the target spine, the reduced path over the source spine that the lift
sends onto it.  These are exactly the arcs of ``phi(beta) . O_tau``, so no
normalisation search is needed; the uniqueness of the normalising mapping class
makes word equality an exact test for equality of lifts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braid import BraidError, BraidWord, ColoredBraid, LabelTuple, hurwitz_apply
from .cover import spine
from .graphical import ArcWord, apply_morphism, canonical_object
from .words import Word, abelianize, concat, format_path, int_det, invert_word, substitute


class LiftError(ValueError):
    """Lifts that cannot be composed or classified."""


@dataclass(frozen=True)
class SpineSubstitution:
    """A mapping class between two covering surfaces, as spine substitutions.

    ``images[j]`` is the path over the source spine mapped onto target edge
    ``j+1``.  ``inverse_images[j]`` is the path over the target spine onto which
    source edge ``j+1`` is mapped.  Both directions are kept so that inversion
    and composition stay exact word operations.
    """

    source: LabelTuple
    target: LabelTuple
    images: tuple[ArcWord, ...]
    inverse_images: tuple[ArcWord, ...]

    @property
    def n(self) -> int:
        return self.source.n

    def image_words(self) -> list[Word]:
        return [w.letters for w in self.images]

    def __str__(self):
        lines = [f"{self.source} -> {self.target}"]
        lines += [f"  f{j}: {format_path(w.letters)}" for j, w in enumerate(self.images, start=1)]
        return "\n".join(lines)


def _substitute_arcs(outer: tuple[ArcWord, ...], inner: tuple[ArcWord, ...]) -> tuple[ArcWord, ...]:
    # ``inner[k]`` runs from the smaller to the larger endpoint of edge k+1,
    # which is also the orientation of edge k+1 itself.
    inner_words = [a.letters for a in inner]
    return tuple(ArcWord(substitute(a.letters, inner_words), a.start, a.end) for a in outer)


def compute_lift(b: ColoredBraid) -> SpineSubstitution:
    tau = b.initial
    target = hurwitz_apply(tau, b.word)
    forward = apply_morphism(canonical_object(tau), b.word)
    backward = apply_morphism(canonical_object(target), b.word.inverse())
    return SpineSubstitution(tau, target, forward.arcs, backward.arcs)


def identity_lift(tau: LabelTuple) -> SpineSubstitution:
    arcs = canonical_object(tau).arcs
    return SpineSubstitution(tau, tau, arcs, arcs)


def compose_lifts(g: SpineSubstitution, f: SpineSubstitution) -> SpineSubstitution:
    """``g`` after ``f``; requires ``f.target == g.source``."""
    if f.target != g.source:
        raise LiftError(f"cannot compose: {f.target} is not {g.source}")
    return SpineSubstitution(
        f.source,
        g.target,
        _substitute_arcs(g.images, f.images),
        _substitute_arcs(f.inverse_images, g.inverse_images),
    )


def invert_lift(f: SpineSubstitution) -> SpineSubstitution:
    return SpineSubstitution(f.target, f.source, f.inverse_images, f.images)


def _require_self_map(f: SpineSubstitution):
    if f.source != f.target:
        raise LiftError(f"not a self-map: {f.source} -> {f.target}")


def is_identity(f: SpineSubstitution) -> bool:
    _require_self_map(f)
    return all(w.letters == (k,) for k, w in enumerate(f.images, start=1))


def loop_basis(tau: LabelTuple) -> list[Word]:
    """One loop at ``x_1`` per non-tree edge of the lowest-index spanning tree."""
    sp = spine(tau)
    tree, loops = sp.spanning_tree()
    # tree paths from x_1 by BFS over tree edges
    paths = {1: ()}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for k in tree:
                a, b = sp.edges[k - 1]
                if a == x and b not in paths:
                    paths[b] = paths[x] + (k,)
                    nxt.append(b)
                elif b == x and a not in paths:
                    paths[a] = paths[x] + (-k,)
                    nxt.append(a)
        frontier = nxt
    basis = []
    for k in loops:
        a, b = sp.edges[k - 1]
        basis.append(concat(paths[a], (k,), invert_word(paths[b])))
    return basis


def h1_action(f: SpineSubstitution) -> list[list[int]]:
    """Matrix of the lift on H_1, in the basis of :func:`loop_basis`.

    Column ``j`` holds the coordinates of the image of basis loop ``j``.  A
    cycle's coordinate on a basis loop is its coefficient on that loop's
    non-tree edge.
    """
    _require_self_map(f)
    loops = spine(f.source).spanning_tree()[1]
    forward = [w.letters for w in f.inverse_images]
    cols = []
    for loop in loop_basis(f.source):
        chain = abelianize(substitute(loop, forward), f.n)
        cols.append([chain[k - 1] for k in loops])
    r = len(loops)
    return [[cols[j][i] for j in range(r)] for i in range(r)]


@dataclass(frozen=True)
class LiftReport:
    liftable: bool
    pi1_rank: int
    h1_matrix: list[list[int]] | None
    is_identity: bool | None
    h1_trivial: bool | None
    transvection_shape: bool | None

    def flags(self) -> dict:
        return {
            "is_identity": self.is_identity,
            "h1_trivial": self.h1_trivial,
            "transvection_shape": self.transvection_shape,
        }


def classify(f: SpineSubstitution) -> dict:
    """Identity test plus homological shape flags.

    ``transvection_shape`` means ``(M - I)^2 = 0`` and ``rank(M - I) <= 1`` for
    the H_1 matrix ``M``.  A single Dehn twist always has this shape, but the
    flag proves nothing by itself: twists about boundary-parallel curves act
    trivially on H_1.
    """
    _require_self_map(f)
    r = spine(f.source).betti_number()
    delta = np.array(h1_action(f), dtype=np.int64).reshape(r, r) - np.eye(r, dtype=np.int64)
    shape = r == 0 or (not (delta @ delta).any() and np.linalg.matrix_rank(delta) <= 1)
    return {
        "is_identity": is_identity(f),
        "h1_trivial": bool(not delta.any()),
        "transvection_shape": bool(shape),
    }


def lift_report(b: ColoredBraid) -> tuple[SpineSubstitution, LiftReport]:
    f = compute_lift(b)
    liftable = f.source == f.target
    rank = spine(b.initial).betti_number()
    if liftable:
        flags = classify(f)
        report = LiftReport(True, rank, h1_action(f), **flags)
    else:
        report = LiftReport(False, rank, None, None, None, None)
    return f, report


def h1_determinant(f: SpineSubstitution) -> int:
    return int_det(h1_action(f))


def arc_type(tau: LabelTuple, conj: BraidWord, i: int) -> dict:
    """Type of the arc that ``conj`` carries to the elementary arc at ``i, i+1``.

    Equal end labels give Type 1, disjoint Type 2, overlapping Type 3; the type
    is the minimal liftable power of the half twist about the arc.
    """
    moved = hurwitz_apply(tau, conj)
    if not 1 <= i <= tau.n - 1:
        raise BraidError(f"arc index {i} out of range [1, {tau.n - 1}]")
    a, b = moved[i], moved[i + 1]
    if a == b:
        kind = 1
    elif not (a.support & b.support):
        kind = 2
    else:
        kind = 3
    twist = conj + BraidWord.of(i) * kind + conj.inverse()
    assert hurwitz_apply(tau, twist) == tau
    for k in range(1, kind):
        # smaller powers must not be liftable
        assert hurwitz_apply(moved, BraidWord.of(i) * k) != moved
    return {"type": kind, "min_liftable_power": kind}


def lift_json(b: ColoredBraid) -> dict:
    f, report = lift_report(b)
    return {
        "initial_labels": str(f.source),
        "terminal_labels": str(f.target),
        "liftable": report.liftable,
        "images": [{"edge": j, "word": format_path(w.letters)} for j, w in enumerate(f.images, start=1)],
        "pi1_rank": report.pi1_rank,
        "h1_matrix": report.h1_matrix,
        "flags": report.flags(),
    }

