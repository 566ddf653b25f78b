"""Word calculus shared by the free group and the spine groupoid.

A word is a tuple of nonzero ints: ``k`` is generator (or edge) ``k``, ``-k`` its
inverse.  The same free reduction serves both settings because a path in the
free groupoid on a graph is reduced exactly when no edge is followed by its
reverse.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def reduce_word(letters: Iterable[int]) -> Word:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def concat(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def substitute(w: Sequence[int], images: Sequence[Sequence[int]]) -> Word:
    """Replace letter ``k`` by ``images[k-1]`` (and ``-k`` by its inverse), then reduce."""
    out: list[int] = []
    for x in w:
        piece = images[x - 1] if x > 0 else invert_word(images[-x - 1])
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def abelianize(w: Sequence[int], rank: int) -> list[int]:
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def artin_images(gens: Iterable[tuple[int, int]], n: int) -> tuple[Word, ...]:
    """Images of the free generators under a braid, via the Hurwitz-style fold.

    ``gens`` is a sequence of ``(index, sign)`` in application order.  Starting
    from ``(x1, ..., xn)``, the generator ``s_i`` replaces entries ``i, i+1`` by
    ``(w_i w_{i+1} w_i^-1, w_i)`` and ``s_i^-1`` by ``(w_{i+1}, w_{i+1}^-1 w_i w_{i+1})``.
    Artin's representation is faithful, so two braid words are equal in B_n
    exactly when these tuples agree.
    """
    ws = [(k,) for k in range(1, n + 1)]
    for i, sign in gens:
        a, b = ws[i - 1], ws[i]
        if sign > 0:
            ws[i - 1], ws[i] = concat(a, b, invert_word(a)), a
        else:
            ws[i - 1], ws[i] = b, concat(invert_word(b), a, b)
    return tuple(ws)


def lift_loop(w: Sequence[int], start: int, edges: Sequence[tuple[int, int]]) -> tuple[Word, int]:
    """Lift a loop word in the punctured disc to a path in the spine groupoid.

    ``edges[k-1] = (a, b)`` is the label of branch value ``k``.  The small loop
    around branch value ``k`` (either orientation) lifts from sheet ``a`` along
    edge ``k`` to ``b``, from ``b`` backwards along edge ``k`` to ``a``, and to a
    null-homotopic loop from every other sheet.  Returns the reduced path and
    the sheet where it ends.
    """
    out: list[int] = []
    here = start
    for x in w:
        a, b = edges[abs(x) - 1]
        if here == a:
            y, here = abs(x), b
        elif here == b:
            y, here = -abs(x), a
        else:
            continue
        if out and out[-1] == -y:
            out.pop()
        else:
            out.append(y)
    return tuple(out), here


def format_path(w: Sequence[int]) -> str:
    """Render a spine path as ``e3 E1 e2`` (capital letter = reversed edge)."""
    return " ".join(f"e{x}" if x > 0 else f"E{-x}" for x in w)


def parse_path(text: str) -> Word:
    letters = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in "eE" or not tok[1:].isdigit() or int(tok[1:]) < 1:
            raise ValueError(f"bad path token {tok!r}")
        k = int(tok[1:])
        letters.append(k if tok[0] == "e" else -k)
    return tuple(letters)


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1
