"""Median recognition, hyperplanes, cubes, distances, convexity, gates."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

import bruteforce as bf
from fixtures import (
    c6_with_chord,
    grid_graph,
    hypercube,
    k23,
    lshape,
    named_fixtures,
    path_graph,
    tree_y,
)
from cubekit.errors import GraphInputError, NotMedianError
from cubekit.median import L1, LINF, MedianGraph, ram_bound

FIX = named_fixtures()


# -- construction guards ------------------------------------------------------


def test_rejects_empty_vertex_set():
    with pytest.raises(GraphInputError):
        MedianGraph([], [])


def test_rejects_loop_edge():
    with pytest.raises(GraphInputError):
        MedianGraph(["a", "b"], [("a", "a")])


def test_rejects_duplicate_edge():
    with pytest.raises(GraphInputError):
        MedianGraph(["a", "b"], [("a", "b"), ("b", "a")])


def test_rejects_unknown_endpoint():
    with pytest.raises(GraphInputError):
        MedianGraph(["a", "b"], [("a", "c")])


def test_rejects_disconnected_for_analysis():
    g = MedianGraph(["a", "b", "c"], [("a", "b")])
    with pytest.raises(GraphInputError):
        g.is_median()


# -- median recognition -------------------------------------------------------


def test_four_cycle_is_median():
    assert grid_graph(1, 1).is_median().ok


def test_single_vertex_is_median():
    assert MedianGraph(["v"], []).is_median().ok


def test_k23_witness_is_valid():
    g = k23()
    verdict = g.is_median()
    assert not verdict.ok
    x, y, z = verdict.witness
    meds = bf.median_candidates(g, x, y, z)
    assert len(meds) != 1
    assert set(verdict.medians) == meds
    with pytest.raises(NotMedianError):
        g.require_median()


def test_k23_degree_two_triple_has_two_medians():
    g = k23()
    assert bf.median_candidates(g, "1", "2", "3") == {"a", "b"}


def test_c6_with_chord_witness_is_valid():
    g = c6_with_chord()
    verdict = g.is_median()
    assert not verdict.ok
    x, y, z = verdict.witness
    assert len(bf.median_candidates(g, x, y, z)) != 1


def test_triangle_triple_has_no_median():
    g = c6_with_chord()
    assert bf.median_candidates(g, "0", "1", "2") == set()


@pytest.mark.parametrize("name", sorted(FIX))
def test_registry_fixtures_are_median(name):
    assert FIX[name].is_median().ok


@pytest.mark.parametrize("name", ["square", "tripod", "grid_3x2", "cube3"])
def test_recognition_matches_bruteforce(name):
    ok, _ = bf.is_median_brute(FIX[name])
    assert ok == FIX[name].is_median().ok


def test_bruteforce_agrees_on_non_median():
    ok, witness = bf.is_median_brute(k23())
    assert not ok and witness is not None


def test_cube_corner_median():
    g = hypercube(3)
    assert g.median("100", "010", "001") == "000"


def test_grid_medians_are_coordinatewise():
    g = grid_graph(2, 2)
    for xs in itertools.product(range(3), repeat=2):
        for ys in itertools.product(range(3), repeat=2):
            for zs in itertools.product(range(3), repeat=2):
                m = g.median(f"{xs[0]},{xs[1]}", f"{ys[0]},{ys[1]}", f"{zs[0]},{zs[1]}")
                want = tuple(
                    sorted([xs[i], ys[i], zs[i]])[1] for i in range(2)
                )
                assert m == f"{want[0]},{want[1]}"


def test_interval_matches_bruteforce():
    for name in ["square", "tripod", "grid_3x2", "staircase"]:
        g = FIX[name]
        adj = bf.adj_dict(g)
        d = bf.all_pairs(adj)
        for x, y in itertools.combinations(g.ids, 2):
            want = {m for m in g.ids if d[x][m] + d[m][y] == d[x][y]}
            assert g.interval(x, y) == frozenset(want)


# -- hyperplanes --------------------------------------------------------------


def test_grid_3x2_hyperplanes():
    g = FIX["grid_3x2"]
    assert g.hyperplane_count == 5
    trans = g.transverse
    pairs = {(i, j) for i in range(5) for j in range(5) if i < j and trans[i, j]}
    assert len(pairs) == 6
    # transversality is complete bipartite between the two parallel classes
    vertical = {j for j in range(5) if sum(1 for p in pairs if j in p) == 2}
    horizontal = set(range(5)) - vertical
    assert len(vertical) == 3 and len(horizontal) == 2
    assert pairs == {(min(a, b), max(a, b)) for a in vertical for b in horizontal}


def test_path_hyperplanes_all_disjoint():
    g = FIX["path7"]
    assert g.hyperplane_count == 7
    assert not g.transverse.any()
    for h in g.hyperplanes():
        assert len(h.dual_edges) == 1
        assert h.dimension == 1


def test_hyperplane_sides_partition():
    for name in ["grid_3x2", "cube3", "tripod", "staircase"]:
        g = FIX[name]
        all_ids = set(g.ids)
        for h in g.hyperplanes():
            assert h.side_a | h.side_b == all_ids
            assert not (h.side_a & h.side_b)
            for u, v in h.dual_edges:
                assert (u in h.side_a) != (v in h.side_a)


def test_distance_equals_separating_count():
    for name in ["grid_3x2", "cube4", "tripod", "staircase", "tree_rand"]:
        g = FIX[name]
        d = g.dist
        for ix, iy in itertools.combinations(range(g.n), 2):
            assert d[ix, iy] == len(g.separating(g.ids[ix], g.ids[iy]))


def test_halfspaces_are_convex():
    for name in ["grid_3x2", "cube3", "staircase"]:
        g = FIX[name]
        for j in range(g.hyperplane_count):
            for side in ("a", "b"):
                assert g.is_convex(g.halfspace(j, side)).ok


def test_hyperplane_dimension_from_cubes():
    g = FIX["cube3"]
    assert [h.dimension for h in g.hyperplanes()] == [3, 3, 3]
    g2 = FIX["grid_3x2"]
    assert all(h.dimension == 2 for h in g2.hyperplanes())


# -- cubes ---------------------------------------------------------------------


def test_cube3_inventory():
    g = FIX["cube3"]
    by_dim = {}
    for c in g.cubes():
        by_dim.setdefault(c.dimension, []).append(c)
    assert {d: len(cs) for d, cs in by_dim.items()} == {1: 12, 2: 6, 3: 1}
    maxes = g.maximal_cubes()
    assert len(maxes) == 1 and maxes[0].dimension == 3
    assert maxes[0].vertices == frozenset(g.ids)


def test_grid_3x2_inventory():
    g = FIX["grid_3x2"]
    cubes = g.cubes()
    assert sum(1 for c in cubes if c.dimension == 1) == 17
    assert sum(1 for c in cubes if c.dimension == 2) == 6
    assert all(c.dimension == 2 for c in g.maximal_cubes())
    assert len(g.maximal_cubes()) == 6


def test_tree_cubes_are_edges():
    g = FIX["tree_rand"]
    assert all(c.dimension == 1 and c.maximal for c in g.cubes())
    assert len(g.cubes()) == len(g.edges)


def test_cube_vertices_count():
    for name in ["grid_3x3", "cube4", "square_x_path"]:
        for c in FIX[name].cubes():
            assert len(c.vertices) == 2**c.dimension
            assert len(c.hyperplanes) == c.dimension


# -- distances ----------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hypercube_antipodal_distances(n):
    g = hypercube(n)
    a, b = "0" * n, "1" * n
    assert g.distance(a, b, L1) == n
    assert g.distance(a, b, LINF) == 1


def test_grid_3x2_linf_corner():
    g = FIX["grid_3x2"]
    assert g.distance("0,0", "3,2", LINF) == 3
    assert g.distance("0,0", "3,2", L1) == 5


def test_linf_vs_l1_bounds():
    for name in ["grid_3x2", "grid_3x3", "cube4", "staircase", "tripod"]:
        g = FIX[name]
        for x, y in itertools.combinations(g.ids, 2):
            li = g.distance(x, y, LINF)
            l1 = g.distance(x, y, L1)
            assert li <= l1
            assert l1 <= li * max(c.dimension for c in g.maximal_cubes())


def test_halfspace_restriction_preserves_linf():
    for name in ["grid_3x2", "cube3", "staircase"]:
        g = FIX[name]
        for j in range(g.hyperplane_count):
            hs = sorted(g.halfspace(j, "a"))
            sub = MedianGraph(
                hs,
                [
                    (g.ids[u], g.ids[v])
                    for u, v in g.edges
                    if g.ids[u] in set(hs) and g.ids[v] in set(hs)
                ],
            )
            assert sub.is_median().ok
            for x, y in itertools.combinations(hs, 2):
                assert sub.distance(x, y, LINF) == g.distance(x, y, LINF)


# -- convexity and gates ------------------------------------------------------


def test_lshape_not_convex():
    g, subset = lshape()
    verdict = g.is_convex(subset)
    assert not verdict.ok
    a, b, v = verdict.violation
    assert v == "0,1"
    assert {a, b} == {"0,0", "1,1"}


def test_convexity_needs_connected_induced_subgraph():
    g = FIX["path4"]
    with pytest.raises(GraphInputError):
        g.is_convex(["0", "2"])
    with pytest.raises(GraphInputError):
        g.is_convex([])


def test_intervals_are_convex():
    for name in ["grid_3x3", "cube3", "staircase"]:
        g = FIX[name]
        for x, y in itertools.combinations(g.ids, 2):
            assert g.is_convex(g.interval(x, y)).ok


def test_grid_projection_to_row():
    g = FIX["grid_3x3"]
    row0 = [f"{x},0" for x in range(4)]
    assert g.project(row0, "2,3") == "2,0"
    assert g.project(row0, "0,2") == "0,0"
    assert g.project(row0, "3,0") == "3,0"


def test_grid_gate_image_of_opposite_row():
    g = FIX["grid_3x3"]
    row0 = [f"{x},0" for x in range(4)]
    row3 = [f"{x},3" for x in range(4)]
    image, crossing = g.gate_image(row0, row3)
    assert image == frozenset(row0)
    assert len(crossing) == 3
    # the crossing hyperplanes are exactly those separating the row's ends
    sep = set(g.separating("0,0", "3,0"))
    assert set(crossing) == sep


def test_gate_image_single_point():
    g = FIX["grid_3x3"]
    row0 = [f"{x},0" for x in range(4)]
    image, crossing = g.gate_image(row0, ["1,2"])
    assert image == frozenset({"1,0"})
    assert crossing == ()


def test_projection_idempotent():
    g = FIX["staircase"]
    target = sorted(g.interval("0,0", "2,1"))
    for x in g.ids:
        p = g.project(target, x)
        assert g.project(target, p) == p


def test_projection_is_nearest_point():
    for name in ["grid_3x2", "cube3"]:
        g = FIX[name]
        adj = bf.adj_dict(g)
        d = bf.all_pairs(adj)
        target = sorted(g.interval(g.ids[0], g.ids[-1]))
        tset = set(target)
        for x in g.ids:
            p = g.project(target, x)
            assert d[x][p] == min(d[x][t] for t in tset)


# -- Ramsey-type extraction ----------------------------------------------------


def _max_transverse_clique(g) -> int:
    trans = g.transverse
    h = g.hyperplane_count
    best = 1 if h else 0
    for size in range(2, h + 1):
        found = False
        for combo in itertools.combinations(range(h), size):
            if all(trans[a, b] for a, b in itertools.combinations(combo, 2)):
                found = True
                break
        if found:
            best = size
        else:
            break
    return best


@pytest.mark.parametrize(
    "name,d",
    [("path7", 1), ("grid_3x3", 2), ("tree_rand", 1), ("tree_rand", 3)],
)
def test_disjoint_family_extraction(name, d):
    """Families of >= ram_bound(d) hyperplanes with no d+1 pairwise transverse
    must contain d+1 pairwise disjoint ones, and we can exhibit them."""
    g = FIX[name]
    assert _max_transverse_clique(g) <= d
    assert g.hyperplane_count >= ram_bound(d)
    combo = bf.pairwise_disjoint_family(
        g.transverse, list(range(g.hyperplane_count)), d + 1
    )
    assert combo is not None


def test_ram_bound_values():
    assert [ram_bound(d) for d in range(5)] == [1, 2, 6, 20, 70]
