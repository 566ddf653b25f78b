import random

import pytest
from hypothesis import given, settings, strategies as st

from braidlift.braid import parse_labels, total_monodromy
from braidlift.cover import boundary_traversal, build_cover, cover_info, spine, topology
from braidlift.perm import cycles
from helpers import ANNULUS, DISC, SQUARE, TORUS, random_labels


@pytest.mark.parametrize(
    "tau,chi,genus,boundaries",
    [(DISC, 1, 0, 1), (ANNULUS, 0, 0, 2), (TORUS, -1, 1, 1), (SQUARE, 0, 0, 2)],
    ids=["disc", "annulus", "torus", "square"],
)
def test_known_surfaces(tau, chi, genus, boundaries):
    top = topology(build_cover(tau))
    assert top.euler_characteristic == chi
    assert top.genus == genus
    assert len(top.boundary_components) == boundaries


def test_annulus_boundaries_include_fixed_sheet():
    top = topology(build_cover(ANNULUS))
    assert top.boundary_components == ((1,), (2, 3))


def test_spine_of_torus():
    sp = spine(TORUS)
    assert sp.edges == ((1, 2), (2, 3), (2, 3), (2, 3))
    assert sp.vertex_order(2) == [1, 2, 3, 4]
    assert sp.betti_number() == 2
    assert sp.spanning_tree() == ([1, 2], [3, 4])


def test_cover_info_json():
    info = cover_info(parse_labels("(1 2),(2 3),(2 3),(2 3)", 3))
    assert info["genus"] == 1
    assert info["boundary_cycles"] == [[1, 3, 2]]
    assert info["spine"]["edges"][0] == [1, 1, 2]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 5), st.integers(4, 8))
def test_traversal_matches_monodromy_cycles(seed, d, n):
    tau = random_labels(random.Random(seed), d, n)
    c = build_cover(tau)
    comps = boundary_traversal(c)
    assert [[s for s, arc in comp if arc == 0] for comp in comps] == cycles(total_monodromy(tau))
    # every boundary piece is visited exactly once
    assert sum(len(comp) for comp in comps) == d * n
    top = topology(c)
    assert top.euler_characteristic == d - n
    assert 2 - 2 * top.genus - len(top.boundary_components) == d - n
