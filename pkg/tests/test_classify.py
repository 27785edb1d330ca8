import threading

import pytest

from dscomplex.build import barycentric_refinement, cone, edge_refinement, join, suspension, vertex_star_ball
from dscomplex.classify import (
    Budget,
    ClassificationCache,
    boundary,
    canonical_key,
    is_contractible,
    is_ds_ball,
    is_ds_manifold,
    is_ds_manifold_with_boundary,
    is_ds_sphere,
    is_ds_variety,
    is_ds_variety_links,
    is_manifold,
    is_sphere,
    sphere_formula_check,
    stats,
)
from dscomplex.core import closure, euler_characteristic, star, unit_sphere
from dscomplex.corpus import SHIPPED
from dscomplex.library import (
    boundary_simplex,
    cross_polytope,
    cycle,
    example,
    full_simplex,
    graph_complex,
    icosahedron,
    octahedron,
    projective_plane,
    star_graph,
    cube_graph,
    dodecahedron_graph,
    torus,
)

VOID = closure([])


def test_ds_sphere_examples():
    assert is_ds_sphere(VOID, -1)
    assert not is_ds_sphere(VOID, 0)
    assert is_ds_sphere(octahedron(), 2)
    rr = example("rp2+rp2")
    assert is_ds_sphere(rr, 2)
    assert is_sphere(rr, 2) is False


def test_ds_manifold_examples():
    assert is_ds_manifold(closure([[0], [3], [7]]), 0)
    assert is_ds_manifold(example("suspension-rp2+rp2"), 3)
    assert is_manifold(example("suspension-rp2+rp2"), 3) is False
    assert not is_ds_manifold(full_simplex(3), 2)
    assert not is_ds_manifold(VOID, -1)


def test_ds_variety_examples():
    for n in (3, 4, 6):
        assert is_ds_variety(graph_complex(star_graph(n)), 1)
    assert is_ds_variety(graph_complex(cube_graph()), 1)
    assert is_ds_variety(graph_complex(dodecahedron_graph()), 1)
    assert is_ds_variety(closure([[0, 1], [1, 2], [1, 3], [3, 4]]), 1)
    assert not is_ds_variety(closure([[0], [1, 2]]), 1)
    assert is_ds_variety(octahedron(), 2)


def test_ds_variety_link_reading():
    for G in (octahedron(), cycle(5), graph_complex(star_graph(4)), graph_complex(cube_graph())):
        assert is_ds_variety_links(G, G.dim) == is_ds_variety(G, G.dim) is True
    # unit spheres at dimension q - dim(x) - 1 would reject every edge of a graph
    S = unit_sphere(graph_complex(star_graph(4)), (0, 1))
    assert len(S) == 2 and not is_ds_variety(S, -1)


def test_classical_predicates():
    assert is_contractible(closure([[0]])) is True
    assert is_contractible(full_simplex(4)) is True
    assert is_contractible(cycle(5)) is False
    assert is_contractible(VOID) is False
    assert is_sphere(octahedron(), 2) is True
    assert is_sphere(icosahedron(), 2) is True
    R = projective_plane()
    assert is_manifold(R, 2) is True
    assert is_sphere(R, 2) is False
    assert euler_characteristic(R) == 1
    assert is_manifold(torus(), 2) is True


STRIP = closure([[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]])


def test_contractible_non_cone():
    assert not set.intersection(*map(set, STRIP.facets))
    assert is_contractible(STRIP) is True
    assert is_contractible(closure([[0, 1], [1, 2], [2, 3]])) is True


def test_contractible_budget_unknown():
    cache = ClassificationCache()
    assert is_contractible(STRIP, cache, Budget(limit=0)) is None
    assert canonical_key(STRIP) not in {k[2] for k in cache._table}
    assert is_contractible(STRIP, cache, Budget(limit=1000)) is True


def test_budget_env(monkeypatch):
    monkeypatch.setenv("DSCOMPLEX_BUDGET", "7")
    assert Budget().limit == 7


def test_sphere_formula_examples():
    for name in SHIPPED:
        assert sphere_formula_check(example(name), 1)
    assert sphere_formula_check(octahedron(), 2)
    assert sphere_formula_check(VOID, 1)
    with pytest.raises(ValueError):
        sphere_formula_check(octahedron(), 0)


def test_boundary_examples():
    for q in (1, 2, 3):
        K = full_simplex(q + 1)
        assert is_ds_manifold_with_boundary(K, q)
        assert boundary(K, q) == boundary_simplex(q + 1)
    O = octahedron()
    B = closure(star(O, (0,)).members)
    assert is_ds_manifold_with_boundary(B, 2)
    assert boundary(B, 2) == unit_sphere(O, (0,))
    assert is_ds_ball(B, 2)
    assert boundary(O, 2) == VOID
    assert is_ds_manifold_with_boundary(O, 2)


def test_ball_from_vertex_star():
    X = cross_polytope(3)
    B = vertex_star_ball(X, 0)
    assert is_ds_ball(B, 3)
    assert is_ds_sphere(boundary(B, 3), 2)


def test_corpus_implications():
    for name in SHIPPED:
        G = example(name)
        q = G.dim
        if is_manifold(G, q):
            assert is_ds_manifold(G, q)
        if is_sphere(G, q):
            assert is_ds_sphere(G, q)


def test_odd_dimensional_ds_manifolds_are_spheres():
    for G in (cycle(5), cross_polytope(3), example("c4-join-c4"), example("suspension-rp2+rp2"), closure([[0], [1]])):
        q = G.dim
        if q % 2 == 1:
            assert is_ds_manifold(G, q)
            assert euler_characteristic(G) == 0
            assert is_ds_sphere(G, q)


def test_join_of_ds_spheres():
    spheres = [closure([[0], [1]]), cycle(4), octahedron(), example("rp2+rp2")]
    for A in spheres:
        for B in spheres[:2]:
            assert is_ds_sphere(join(A, B), A.dim + B.dim + 1)


def test_refinements_preserve():
    for G in (octahedron(), projective_plane(), cycle(5)):
        q = G.dim
        assert is_ds_manifold(barycentric_refinement(G), q)
        e = next(x for x in G.simplices if len(x) == 2)
        assert is_ds_manifold(edge_refinement(G, e), q)


def test_vertex_only_condition_equivalent():
    for name in SHIPPED:
        G = example(name)
        q = G.dim
        vertex_only = all(is_ds_sphere(unit_sphere(G, (v,)), q - 1) for v in G.vertices)
        assert vertex_only == is_ds_manifold(G, q), name
    K = full_simplex(3)
    assert not all(is_ds_sphere(unit_sphere(K, (v,)), 1) for v in K.vertices)


def test_cache_is_pure():
    G = cross_polytope(3)
    c1, c2 = ClassificationCache(), ClassificationCache()
    a = is_ds_sphere(G, 3, c1)
    b = is_ds_sphere(G, 3, c1)
    assert a == b == is_ds_sphere(G, 3, c2)
    assert stats(c1)["hits"] > 0
    assert canonical_key(closure([[5, 7]])) == canonical_key(closure([[0, 1]]))


def test_cache_threads():
    cache = ClassificationCache()
    names = ["octahedron", "icosahedron", "rp2", "torus", "cross:3"]
    out = {}

    def work(n):
        out[n] = is_ds_manifold(example(n), None, cache)

    th = [threading.Thread(target=work, args=(n,)) for n in names * 3]
    for t in th:
        t.start()
    for t in th:
        t.join()
    assert all(out.values())


def test_inferred_q():
    assert is_ds_sphere(octahedron())
    assert is_ds_manifold(torus())
    assert not is_ds_sphere(cone(cycle(4)))
    assert is_ds_sphere(suspension(cycle(4)))
