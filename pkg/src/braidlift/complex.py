"""One-skeleta of the label complex and the arc-system complex, with 2-cell data.

The label complex has one vertex per label tuple in a Hurwitz orbit.  The
arc-system complex is infinite whenever the surface has infinite mapping class
group, so only balls of bounded word radius around the canonical object are
built.  Edges are ``(source, i, sign, target)`` with vertex indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .braid import BraidWord, LabelTuple, hurwitz_apply, hurwitz_step, orbit
from .graphical import apply_generator, apply_morphism, canonical_object, label_of


@dataclass
class ComplexGraph:
    vertices: list
    edges: list[tuple[int, int, int, int]]
    base: int = 0
    n: int = 0
    # word-length distance from the base and the truncation radius, for balls
    depth: list[int] = field(default_factory=list)
    radius: int | None = None

    def index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def to_json(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "edges": [[s, i, sign, t] for s, i, sign, t in self.edges],
            "base": self.base,
        }


def build_xm(tau0: LabelTuple) -> ComplexGraph:
    verts, edges = orbit(tau0, with_edges=True)
    idx = {v: k for k, v in enumerate(verts)}
    return ComplexGraph(
        verts,
        [(idx[s], i, sign, idx[t]) for s, i, sign, t in edges],
        base=idx[tau0],
        n=tau0.n,
    )


def build_xg_ball(tau0: LabelTuple, radius: int) -> ComplexGraph:
    """Graphical objects within ``radius`` generator moves of the canonical object."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    start = canonical_object(tau0)
    depth = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if depth[cur] == radius:
            continue
        for i in range(1, tau0.n):
            for sign in (1, -1):
                nxt = apply_generator(cur, i, sign)
                if nxt not in depth:
                    depth[nxt] = depth[cur] + 1
                    order.append(nxt)
                    queue.append(nxt)
    idx = {v: k for k, v in enumerate(order)}
    edges = []
    for v in order:
        for i in range(1, tau0.n):
            for sign in (1, -1):
                w = apply_generator(v, i, sign)
                if w in idx:
                    edges.append((idx[v], i, sign, idx[w]))
    return ComplexGraph(order, edges, base=0, n=tau0.n, depth=[depth[v] for v in order], radius=radius)


def braid_relation_words(n: int) -> list[tuple[str, BraidWord]]:
    words = []
    for i in range(1, n - 1):
        words.append((f"braid({i},{i + 1})", BraidWord.of(i, i + 1, i, -(i + 1), -i, -(i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            words.append((f"commute({i},{j})", BraidWord.of(i, j, -i, -j)))
    return words


@dataclass
class TwoCellInventory:
    braid_relation_cells: list[tuple[int, str, BraidWord]]
    power_cells: list[tuple[int, str, BraidWord]]
    # relations of the mapping class group are not constructed here
    mcg_relation_cells: list = field(default_factory=list)
    mcg_relation_note: str = "not constructed: needs a finite presentation of the mapping class group"

    def all_cells(self):
        return self.braid_relation_cells + self.power_cells

    def to_json(self) -> dict:
        def rows(cells):
            return [{"vertex": v, "kind": kind, "word": str(w)} for v, kind, w in cells]

        return {
            "braid_relation_cells": rows(self.braid_relation_cells),
            "power_cells": rows(self.power_cells),
            "mcg_relation_cells": [],
            "mcg_relation_note": self.mcg_relation_note,
        }


def power_cells_at(tau: LabelTuple) -> list[tuple[str, BraidWord]]:
    cells = []
    for i in range(1, tau.n):
        a, b = tau[i], tau[i + 1]
        if a == b:
            continue
        k = 2 if not (a.support & b.support) else 3
        cells.append((f"power(s{i}^{k})", BraidWord.of(i) * k))
    return cells


def two_cell_inventory(tau0: LabelTuple, xm: ComplexGraph | None = None) -> TwoCellInventory:
    xm = xm or build_xm(tau0)
    rel = braid_relation_words(tau0.n)
    braid_cells, power_cells = [], []
    for k, v in enumerate(xm.vertices):
        for kind, w in rel:
            assert hurwitz_apply(v, w) == v, (v, w)
            braid_cells.append((k, kind, w))
        for kind, w in power_cells_at(v):
            assert hurwitz_apply(v, w) == v, (v, w)
            power_cells.append((k, kind, w))
    return TwoCellInventory(braid_cells, power_cells)


@dataclass
class CoveringReport:
    slot_failures: list[str] = field(default_factory=list)
    closed_loop_failures: list[str] = field(default_factory=list)
    open_loop_failures: list[str] = field(default_factory=list)
    slots_checked: int = 0
    closed_loops_checked: int = 0
    open_loops_checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.slot_failures or self.closed_loop_failures or self.open_loop_failures)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "slots_checked": self.slots_checked,
            "closed_loops_checked": self.closed_loops_checked,
            "open_loops_checked": self.open_loops_checked,
            "slot_failures": self.slot_failures,
            "closed_loop_failures": self.closed_loop_failures,
            "open_loop_failures": self.open_loop_failures,
        }


def check_covering(ball: ComplexGraph, xm: ComplexGraph) -> CoveringReport:
    """Local covering-map checks of the label map from a ball onto the label complex.

    (a) at interior ball vertices, the signed generator slots map bijectively
    onto the slots at the image vertex; (b) every braid-relation and power-cell
    loop at the image vertex lifts to a closed loop at each ball vertex; (c) every
    equal-label generator loop lifts to a path that does not close up.
    """
    rep = CoveringReport()
    xm_index = xm.index()
    n = xm.n
    slots = [(i, s) for i in range(1, n) for s in (1, -1)]
    out_edges: dict[int, dict[tuple[int, int], int]] = {}
    for s, i, sign, t in ball.edges:
        out_edges.setdefault(s, {})[(i, sign)] = t
    xm_out: dict[int, dict[tuple[int, int], int]] = {}
    for s, i, sign, t in xm.edges:
        xm_out.setdefault(s, {})[(i, sign)] = t
    relations = braid_relation_words(n)

    for k, obj in enumerate(ball.vertices):
        tau = label_of(obj)
        if tau not in xm_index:
            rep.slot_failures.append(f"vertex {k}: label {tau} not in label complex")
            continue
        image = xm_index[tau]
        if ball.radius is not None and ball.depth[k] < ball.radius:
            mine = out_edges.get(k, {})
            theirs = xm_out.get(image, {})
            if set(mine) != set(slots) or set(theirs) != set(slots):
                rep.slot_failures.append(f"vertex {k}: incomplete generator slots")
            for slot in slots:
                rep.slots_checked += 1
                if slot not in mine or slot not in theirs:
                    continue
                if label_of(ball.vertices[mine[slot]]) != xm.vertices[theirs[slot]]:
                    rep.slot_failures.append(f"vertex {k}: slot {slot} maps to the wrong label")

        for kind, w in relations + power_cells_at(tau):
            rep.closed_loops_checked += 1
            if apply_morphism(obj, w) != obj:
                rep.closed_loop_failures.append(f"vertex {k}: {kind} does not lift to a closed loop")
        for i in range(1, n):
            if tau[i] == tau[i + 1]:
                for sign in (1, -1):
                    rep.open_loops_checked += 1
                    if hurwitz_step(tau, i, sign) != tau:
                        rep.open_loop_failures.append(f"vertex {k}: s{i} is not a loop downstairs")
                    if apply_generator(obj, i, sign) == obj:
                        rep.open_loop_failures.append(f"vertex {k}: s{i}^{sign} lifts to a closed loop")
    return rep


def export_dot(g: ComplexGraph, name: str = "complex") -> str:
    lines = [f"digraph {name} {{"]
    for k, v in enumerate(g.vertices):
        label = str(v).replace('"', '\\"')
        attrs = f'label="{label}"'
        if k == g.base:
            attrs += ", shape=box"
        lines.append(f"  v{k} [{attrs}];")
    for s, i, sign, t in g.edges:
        gen = f"s{i}" if sign > 0 else f"s{i}^-1"
        lines.append(f'  v{s} -> v{t} [label="{gen}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
