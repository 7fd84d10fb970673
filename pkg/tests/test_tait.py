"""Checkerboard coloring, Tait graphs, duals, and the medial round trip."""

import random

import pytest

import regionchange as rc
from regionchange.errors import DisconnectedError, MalformedError
from regionchange.tait import BLACK, WHITE

from conftest import doubled_triangle


def test_checkerboard_trefoil(trefoil):
    cb = rc.checkerboard(trefoil)
    assert cb.n_black + cb.n_white == 5
    assert cb.colors[trefoil.outer_face] == WHITE
    # Adjacent faces get opposite colors: every edge separates black/white.
    for dart, face in enumerate(trefoil.face_of_dart):
        other = trefoil.face_of_dart[trefoil.mate[dart]]
        assert cb.colors[face] != cb.colors[other]


def test_checkerboard_counts(corpus):
    for d in corpus:
        cb = rc.checkerboard(d)
        assert cb.n_black + cb.n_white == d.c + 2
        assert cb.colors[d.outer_face] == WHITE


def test_tait_graph_trefoil(trefoil):
    g = rc.tait_graph(trefoil)
    cb = rc.checkerboard(trefoil)
    assert g.n_vertices == cb.n_black
    assert g.n_edges() == trefoil.c
    assert len(set(g.signs)) == 1  # alternating diagram: uniform edge signs


def test_tait_graph_edge_per_crossing(corpus):
    for d in corpus:
        g = rc.tait_graph(d)
        assert g.n_edges() == d.c


def test_plane_graph_validation():
    with pytest.raises(MalformedError):
        rc.SignedPlaneGraph(2, ((0, 1),), (2,), (((0, 0),), ((0, 1),)))
    with pytest.raises(MalformedError):
        rc.SignedPlaneGraph(2, ((0, 1),), (1,), (((0, 0), (0, 0)), ((0, 1),)))
    with pytest.raises(DisconnectedError):
        rc.SignedPlaneGraph(
            3, ((0, 1),), (1,), (((0, 0),), ((0, 1),), ())
        )
    # A rotation system of higher genus is rejected even when the abstract
    # graph is planar.
    with pytest.raises(MalformedError):
        rc.SignedPlaneGraph(
            1,
            ((0, 0), (0, 0)),
            (1, 1),
            (((0, 0), (1, 0), (0, 1), (1, 1)),),
        )


def test_plane_graph_parse_round_trip():
    g = doubled_triangle()
    again = rc.SignedPlaneGraph.parse(g.serialize())
    assert rc.is_isomorphic(g, again)


def test_parse_errors():
    with pytest.raises(MalformedError):
        rc.SignedPlaneGraph.parse("E 1 1 2 +1\n")  # missing V header
    with pytest.raises(MalformedError):
        rc.SignedPlaneGraph.parse("V 2\nE 1 1 2 ?\nR 1 1\nR 2 1\n")


def test_medial_trefoil():
    g = rc.tait_graph(rc.parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"))
    d = rc.medial_diagram(g)
    assert d.c == 3
    assert len(d.components) == 1


def test_round_trip_fixture_graphs(trefoil, hopf, chain3):
    for d in (trefoil, hopf, chain3):
        g = rc.tait_graph(d)
        assert rc.is_isomorphic(rc.tait_graph(rc.medial_diagram(g)), g)


def test_dual_involution(corpus):
    for d in corpus[:40]:
        g = rc.tait_graph(d)
        assert rc.is_isomorphic(rc.dual(rc.dual(g)), g)


def test_dual_swaps_color_roles(trefoil):
    g = rc.tait_graph(trefoil)
    gd = rc.dual(g)
    # Euler duality: vertex and face counts swap, edges are shared.
    assert gd.n_edges() == g.n_edges()
    assert gd.n_vertices == len(g.faces())
    assert len(gd.faces()) == g.n_vertices
    assert gd.signs == g.signs


def test_is_isomorphic_detects_sign_change():
    g = doubled_triangle()
    h = rc.SignedPlaneGraph(
        g.n_vertices, g.edges, (-1,) + g.signs[1:], g.rot
    )
    assert not rc.is_isomorphic(g, h)


def test_medial_of_doubled_triangle():
    d = rc.medial_diagram(doubled_triangle())
    assert d.c == 6
    assert len(d.components) == 3
    lks = [d.linking_number(i, j) for i in range(3) for j in range(i + 1, 3)]
    assert all(v % 2 == 1 for v in lks)


def test_random_round_trip_small():
    rng = random.Random(99)
    for _ in range(50):
        g = rc.random_plane_graph(rng, rng.randint(1, 10))
        assert rc.is_isomorphic(rc.tait_graph(rc.medial_diagram(g)), g)
