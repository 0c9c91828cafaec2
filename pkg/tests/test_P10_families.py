import random

import pytest

from processes.P06_class_items import FamilySyntaxError, TutteDomainError
from processes.P08_multigraph import Multigraph, canonical_key
from processes.P09_tutte_engine import tutte
from processes.P10_families import (
    Box, Cycle, Cylinder, Delta, Join, Multiedge, PathGraph, Theta, box_star, box_star_spec, build,
    comb_move, describe, join, parse_family, subdivide_edge, theta_star, theta_star_spec,
)

K4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.mark.parametrize("spec, n, m", [
    (Cycle(1), 1, 1),
    (Cycle(5), 5, 5),
    (Multiedge(3), 2, 3),
    (PathGraph(4), 4, 3),
    (Theta((1, 2, 3)), 5, 6),
    (Theta((2, 2, 2, 2)), 6, 8),
    (Delta((2, 2, 1, 3, 1)), 7, 9),
    (Box((1, 1, 1, 1, 1, 1)), 4, 6),
    (Box((2, 2, 2, 1, 1, 1)), 7, 9),
    (Cylinder((1, 2, 1, 2, 1, 1)), 6, 8),
])
def test_build_vertex_and_edge_counts(spec, n, m):
    g = build(spec)
    assert (g.vertex_count, g.edge_count) == (n, m)
    assert g.is_connected()


def test_unit_box_is_k4():
    assert canonical_key(build(Box((1, 1, 1, 1, 1, 1)))) == canonical_key(K4)


def test_join_builds_paw():
    paw = Multigraph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert canonical_key(build(Join((Cycle(3), Multiedge(1))))) == canonical_key(paw)
    assert join(build(Cycle(3)), build(Cycle(3))).vertex_count == 5


@pytest.mark.parametrize("left, right, n, m", [
    (Theta((2, 2, 2)), Multiedge(1), 6, 7),
    (Cycle(3), Cycle(4), 6, 7),
    (Cycle(4), Cycle(3), 6, 7),
    (Multiedge(1), Theta((1, 2, 3)), 6, 7),
    (Cycle(5), Multiedge(1), 6, 6),
])
def test_join_vertex_count_follows_both_parts(left, right, n, m):
    g = join(build(left), build(right))
    assert (g.vertex_count, g.edge_count) == (n, m)
    assert g.is_connected()
    assert canonical_key(g) == canonical_key(build(Join((left, right))))


def test_family_validation():
    with pytest.raises(TutteDomainError):
        Theta((1, 1, 2))
    with pytest.raises(TutteDomainError):
        Theta((3,))
    with pytest.raises(TutteDomainError):
        Delta((1, 1, 2, 2, 1))
    with pytest.raises(TutteDomainError):
        Cylinder((2, 2, 1, 1, 1, 1))
    with pytest.raises(TutteDomainError):
        Box((1, 1, 1, 1, 1))
    with pytest.raises(TutteDomainError):
        Cycle(0)


def test_theta_star():
    assert theta_star_spec(5) == Theta((2, 2, 2))
    assert theta_star_spec(6) == Theta((2, 2, 3))
    assert theta_star_spec(7) == Theta((2, 3, 3))
    assert theta_star(8).vertex_count == 8
    with pytest.raises(TutteDomainError):
        theta_star(3)


def test_box_star():
    assert box_star_spec(5) == Box((2, 1, 1, 1, 1, 1))
    assert box_star_spec(7) == Box((2, 2, 2, 1, 1, 1))
    assert box_star_spec(8) == Box((2, 2, 2, 2, 1, 1))
    for n in range(4, 10):
        g = box_star(n)
        assert (g.vertex_count, g.edge_count) == (n, n + 2)


@pytest.mark.parametrize("text, spec", [
    ("C3", Cycle(3)),
    ("K2", Multiedge(1)),
    ("M4", Multiedge(4)),
    ("P3", PathGraph(3)),
    ("theta:1,2,3", Theta((1, 2, 3))),
    ("theta: 2, 2, 2, 2", Theta((2, 2, 2, 2))),
    ("delta:2,2,1,3,1", Delta((2, 2, 1, 3, 1))),
    ("box:1,1,1,1,1,1", Box((1, 1, 1, 1, 1, 1))),
    ("cyl:1,2,1,2,1,1", Cylinder((1, 2, 1, 2, 1, 1))),
    ("C3 * K2 * K2", Join((Cycle(3), Multiedge(1), Multiedge(1)))),
])
def test_parse_family(text, spec):
    assert parse_family(text) == spec


def test_parse_round_trips_through_dsl():
    for text in ("C3*K2*K2", "theta:1,2,3", "box:2,1,1,1,1,1", "M3*C4"):
        assert parse_family(text).to_dsl() == text


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("C3 K2", 3),
    ("C3*", 3),
    ("theta:1,2", 0),
    ("box:1,1,1", 0),
    ("Q5", 0),
    ("C3*theta:1,1,2", 3),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(FamilySyntaxError) as caught:
        parse_family(text)
    assert caught.value.position == position


def _cylinder_draws(rng, count):
    draws = []
    while len(draws) < count:
        a, b, c, d, e, f = (rng.randint(1, 3) for _ in range(6))
        if (a, b) != (1, 1) and (c, d) != (1, 1):
            draws.append((a, b, c, d, e, f))
    return draws


def test_cylinder_matches_delta_with_merged_ear():
    for a, b, c, d, e, f in _cylinder_draws(random.Random(17), 20):
        assert tutte(build(Cylinder((a, b, c, d, e, f)))) == tutte(build(Delta((a, b, c, d, e + f))))


@pytest.mark.slow
def test_cylinder_matches_delta_on_fifty_draws():
    for a, b, c, d, e, f in _cylinder_draws(random.Random(41), 50):
        assert tutte(build(Cylinder((a, b, c, d, e, f)))) == tutte(build(Delta((a, b, c, d, e + f))))


@pytest.mark.parametrize("n", range(4, 13))
def test_extremal_families_are_simple(n):
    for g in (theta_star(n), box_star(n)):
        assert g.is_simple()
        assert g.vertex_count == n
    assert theta_star(n).edge_count == n + 1
    assert box_star(n).edge_count == n + 2


@pytest.mark.parametrize("graph, text", [
    (build(Cycle(3)), "C3"),
    (build(Join((Cycle(3), Cycle(4)))), "C4*C3"),
    (build(Join((Cycle(3), Multiedge(1)))), "C3*K2"),
    (theta_star(5), "theta:2,2,2"),
    (build(Theta((3, 1, 2))), "theta:1,2,3"),
    (box_star(5), "box:2,1,1,1,1,1"),
    (K4, "box:1,1,1,1,1,1"),
    (build(Delta((2, 2, 1, 3, 1))), "delta:3,1,2,2,1"),
    (build(Multiedge(3)), "M3"),
    (Multigraph(1, [(0, 0)]), "C1"),
    (Multigraph(1), "P1"),
])
def test_describe(graph, text):
    assert describe(graph) == text


def test_describe_unrecognised_and_disconnected():
    k5 = Multigraph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert describe(k5) is None
    assert describe(Multigraph(2)) is None


def test_comb_move_on_two_triangles():
    c3 = build(Cycle(3))
    g, h = comb_move(c3, c3)
    assert canonical_key(g) == canonical_key(build(Join((Cycle(3), Cycle(3)))))
    assert canonical_key(h) == canonical_key(build(Theta((1, 2, 3))))
    assert (g.vertex_count, g.edge_count) == (h.vertex_count, h.edge_count)


def test_comb_move_needs_neighbours():
    with pytest.raises(TutteDomainError):
        comb_move(Multigraph(1), build(Cycle(3)))


def test_subdivide_edge():
    g = subdivide_edge(build(Cycle(3)), (0, 1))
    assert canonical_key(g) == canonical_key(build(Cycle(4)))
    assert (3, 1) not in g.edges and (0, 3) in g.edges and (1, 3) in g.edges
    with pytest.raises(TutteDomainError):
        subdivide_edge(build(Cycle(3)), (0, 0))
