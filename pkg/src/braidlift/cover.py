"""Combinatorial branched covers of the disc built from a label tuple.

The cover is ``d`` copies of the disc, each cut along ``n`` arcs running from
the branch values up to the boundary, glued crosswise along cut ``i`` on the two
sheets moved by label ``i``.  Only the gluing combinatorics is stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import LabelTuple, total_monodromy
from .perm import Transposition, cycles


@dataclass(frozen=True)
class CoverPresentation:
    labels: LabelTuple
    gluings: tuple[Transposition, ...]
    basepoints: tuple[int, ...]

    @property
    def d(self) -> int:
        return self.labels.d

    @property
    def n(self) -> int:
        return self.labels.n


@dataclass(frozen=True)
class Spine:
    """Ribbon graph onto which the cover retracts.

    Edge ``k`` joins ``x_a`` and ``x_b`` for ``labels[k] = (a b)`` and is oriented
    from ``a`` to ``b``.  At each vertex the edge-ends are ordered by edge index.
    """

    d: int
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.edges)

    def vertex_order(self, x: int) -> list[int]:
        return [k for k, (a, b) in enumerate(self.edges, start=1) if x in (a, b)]

    def betti_number(self) -> int:
        return self.n - self.d + 1

    def spanning_tree(self) -> tuple[list[int], list[int]]:
        """Greedy spanning tree on lowest edge indices: ``(tree_edges, loop_edges)``."""
        parent = list(range(self.d + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree, loops = [], []
        for k, (a, b) in enumerate(self.edges, start=1):
            ra, rb = find(a), find(b)
            if ra == rb:
                loops.append(k)
            else:
                parent[ra] = rb
                tree.append(k)
        return tree, loops


@dataclass(frozen=True)
class CoverTopology:
    euler_characteristic: int
    boundary_components: tuple[tuple[int, ...], ...]
    genus: int


def build_cover(tau: LabelTuple) -> CoverPresentation:
    if not isinstance(tau, LabelTuple):
        raise TypeError("build_cover expects a LabelTuple")
    return CoverPresentation(tau, tuple(tau.labels), tuple(range(1, tau.d + 1)))


def spine(tau: LabelTuple) -> Spine:
    return Spine(tau.d, tuple((t.a, t.b) for t in tau))


def boundary_traversal(c: CoverPresentation) -> list[list[tuple[int, int]]]:
    """Walk the outer boundary of every sheet and follow the gluings.

    The boundary circle of one sheet is split by the cut endpoints into arcs
    ``0..n-1``; arc 0 contains the basepoint, and walking clockwise from it one
    meets the cuts in the order 1, 2, ..., n, arriving on arc ``i`` after cut
    ``i`` (arc ``n`` is arc 0 again).  Crossing cut ``i`` moves from sheet ``s``
    to sheet ``t_i(s)``.  Returns one list of ``(sheet, arc)`` pieces per boundary
    component, each starting at its smallest basepoint.
    """
    pieces_seen = set()
    components = []
    for start in c.basepoints:
        if (start, 0) in pieces_seen:
            continue
        comp = []
        sheet, arc = start, 0
        while (sheet, arc) not in pieces_seen:
            pieces_seen.add((sheet, arc))
            comp.append((sheet, arc))
            cut = arc + 1
            sheet = c.gluings[cut - 1](sheet)
            arc = cut % c.n
        components.append(comp)
    return components


def topology(c: CoverPresentation) -> CoverTopology:
    chi = c.d - c.n
    traversed = [tuple(s for s, arc in comp if arc == 0) for comp in boundary_traversal(c)]
    expected = [tuple(cyc) for cyc in cycles(total_monodromy(c.labels))]
    # Both lists start each component at its minimum and are sorted by it.
    assert traversed == expected, (traversed, expected)
    b = len(traversed)
    two_g = 2 - chi - b
    assert two_g >= 0 and two_g % 2 == 0, (chi, b)
    return CoverTopology(chi, tuple(traversed), two_g // 2)


def cover_info(tau: LabelTuple) -> dict:
    """JSON-ready summary of the cover and its spine."""
    c = build_cover(tau)
    top = topology(c)
    sp = spine(tau)
    return {
        "d": tau.d,
        "n": tau.n,
        "labels": str(tau),
        "euler_characteristic": top.euler_characteristic,
        "genus": top.genus,
        "boundary_cycles": [list(b) for b in top.boundary_components],
        "spine": {"edges": [[k, a, b] for k, (a, b) in enumerate(sp.edges, start=1)]},
    }
