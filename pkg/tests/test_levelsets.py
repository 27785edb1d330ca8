import random

import pytest

from dscomplex.build import barycentric_refinement, disjoint_union, join
from dscomplex.classify import boundary, is_ds_sphere, is_ds_variety
from dscomplex.core import closure, order_complex, skeleton_graph
from dscomplex.graph import Graph, isomorphic
from dscomplex.levelsets import (
    VertexFunction,
    level_complex,
    level_set,
    manifold_with_boundary_level,
    random_vertex_function,
    unstable_agrees,
    verify_level_theorem,
)
from dscomplex.library import cross_polytope, cube_graph, cycle, graph_complex, octahedron, star_graph

POLES = {0: 1, 1: 1, 2: 0, 3: 0, 4: 0, 5: 0}


def test_vertex_function_validation():
    with pytest.raises(ValueError):
        VertexFunction({0: 2}, 1)
    with pytest.raises(ValueError):
        VertexFunction({0: 0}, 0)
    g = VertexFunction({0: 0}, 1)
    with pytest.raises(ValueError):
        g.check_total(cycle(4))


def test_octahedron_poles():
    O = octahedron()
    g = VertexFunction(POLES, 1)
    U = level_set(O, g)
    assert len(U) == 16
    assert U.is_open()
    assert all(len(x) == 3 or (len(x) == 2 and (0 in x or 1 in x)) for x in U.members)
    L = level_complex(O, g)
    C8 = barycentric_refinement(cycle(4))
    assert isomorphic(skeleton_graph(L), skeleton_graph(disjoint_union(C8, C8)))
    r = verify_level_theorem(O, g)
    assert r.holds and r.facet_dims == (1,)


def test_octahedron_poles_triangle_graph_is_two_squares():
    # triangles of the level set, joined through a level-set edge, form two 4-cycles
    O = octahedron()
    U = level_set(O, VertexFunction(POLES, 1))
    tris = sorted(x for x in U.members if len(x) == 3)
    edges = [
        (i, j)
        for i, a in enumerate(tris)
        for j, b in enumerate(tris)
        if i < j and tuple(sorted(set(a) & set(b))) in U.members
    ]
    two_c4 = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    assert isomorphic(Graph(8, edges), two_c4)


def test_level_set_small_examples():
    O = octahedron()
    assert len(level_set(O, VertexFunction({v: 0 for v in O.vertices}, 1))) == 0
    assert level_complex(O, VertexFunction({v: 1 for v in O.vertices}, 1)) == closure([])
    K = closure([[1, 2, 3]])
    U = level_set(K, VertexFunction({1: 0, 2: 1, 3: 1}, 1))
    assert U.members == {(1, 2), (1, 3), (1, 2, 3)}


def test_empty_level_set_is_vacuous():
    O = octahedron()
    r = verify_level_theorem(O, VertexFunction({v: 0 for v in O.vertices}, 2))
    assert r.empty and r.holds


def test_random_level_sets_on_three_sphere():
    G = join(cycle(4), cycle(4))
    rng = random.Random(20260101)
    for _ in range(100):
        k = rng.choice((1, 2))
        g = random_vertex_function(G, k, rng)
        r = verify_level_theorem(G, g)
        assert r.holds, (k, dict(g.values))
        if not r.empty:
            assert r.facet_dims == (3 - k,)


def test_level_sets_of_varieties():
    rng = random.Random(5)
    for G in (graph_complex(star_graph(5)), graph_complex(cube_graph())):
        assert is_ds_variety(G, 1)
        for _ in range(20):
            g = random_vertex_function(G, 1, rng)
            r = verify_level_theorem(G, g)
            assert r.precondition == "ds-variety"
            assert r.holds


def test_precondition_reported():
    K = closure([[0, 1, 2], [2, 3]])
    r = verify_level_theorem(K, VertexFunction({0: 0, 1: 1, 2: 1, 3: 0}, 1))
    assert r.precondition == "none" and not r.holds


def test_unstable_spheres_agree():
    rng = random.Random(3)
    X = cross_polytope(3)
    for _ in range(20):
        assert unstable_agrees(X, random_vertex_function(X, 1, rng))


def test_manifold_with_boundary_level():
    O = octahedron()
    g = VertexFunction({v: int(v == 0) for v in O.vertices}, 1)
    r = manifold_with_boundary_level(O, g)
    assert r.verdict and r.boundary_verdict
    assert r.facet_dims == (2,) and r.boundary_dims == (1,)
    members = [x for x in O.simplices if 0 in x]
    B = boundary(order_complex(members), 2)
    assert is_ds_sphere(B, 1)
    X = cross_polytope(3)
    r = manifold_with_boundary_level(X, VertexFunction({v: int(v == 0) for v in X.vertices}, 1))
    assert r.verdict and r.facet_dims == (3,) and r.boundary_dims == (2,)
    B = boundary(order_complex([x for x in X.simplices if 0 in x]), 3)
    assert is_ds_sphere(B, 2) and B.f_vector == (26, 72, 48)


def test_manifold_with_boundary_level_vacuous():
    O = octahedron()
    r = manifold_with_boundary_level(O, VertexFunction({v: 0 for v in O.vertices}, 1))
    assert r.empty and r.holds


def test_random_manifold_with_boundary_levels():
    rng = random.Random(9)
    X = cross_polytope(3)
    for _ in range(15):
        g = random_vertex_function(X, 1, rng)
        r = manifold_with_boundary_level(X, g)
        assert r.verdict
        if r.boundary_dims:
            assert r.boundary_verdict
