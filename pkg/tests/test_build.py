import random

import pytest

from dscomplex.build import (
    barycentric_refinement,
    cartesian_product,
    cone,
    connected_sum,
    disjoint_union,
    edge_refinement,
    graph_edge_construction,
    join,
    maximal_cliques,
    suspension,
    whitney_complex,
)
from dscomplex.classify import is_ds_manifold, is_ds_sphere, is_sphere
from dscomplex.cohomology import betti_vector
from dscomplex.core import ComplexError, closure, euler_characteristic, f_vector, unit_sphere
from dscomplex.graph import Graph, complete_graph, complete_multipartite_graph, cycle_graph
from dscomplex.library import (
    boundary_simplex,
    cross_polytope,
    cycle,
    example,
    full_simplex,
    icosahedron,
    octahedron,
    projective_plane,
    torus,
)
from dscomplex.valuations import barycentric_operator, f_polynomial

TWO_POINTS = closure([[0], [1]])
VOID = closure([])


def test_join_examples():
    B = cycle(5)
    assert f_vector(join(VOID, B)) == f_vector(B)
    assert join(TWO_POINTS, TWO_POINTS) == closure([[0, 2], [0, 3], [1, 2], [1, 3]])
    C = cycle(4)
    assert f_vector(join(C, C)) == (8, 24, 32, 16)


def test_join_multiplies_f_polynomials():
    lib = [TWO_POINTS, cycle(4), cycle(5), octahedron(), full_simplex(3), projective_plane(), VOID]
    for A in lib:
        for B in lib:
            assert f_polynomial(join(A, B)) == f_polynomial(A) * f_polynomial(B)


def test_join_commutative_and_associative_on_invariants():
    A, B, C = cycle(4), TWO_POINTS, full_simplex(2)
    assert f_vector(join(A, B)) == f_vector(join(B, A))
    assert f_vector(join(join(A, B), C)) == f_vector(join(A, join(B, C)))
    assert betti_vector(join(join(A, B), C)) == betti_vector(join(A, join(B, C)))


def test_unit_sphere_of_join():
    rng = random.Random(4)
    A, B = octahedron(), cycle(5)
    J = join(A, B)
    for x in rng.sample(A.simplices, 8):
        assert f_vector(unit_sphere(J, x)) == f_vector(join(unit_sphere(A, x), B))


def test_suspension_and_cone():
    assert f_vector(suspension(cycle(4))) == (6, 12, 8)
    assert suspension(VOID) == TWO_POINTS
    for G in (cycle(4), projective_plane(), VOID, TWO_POINTS):
        assert euler_characteristic(cone(G)) == 1


def test_disjoint_union():
    A = cycle(5)
    assert disjoint_union(A, VOID) == A
    U = disjoint_union(cycle(3), cycle(3))
    assert f_vector(U) == (6, 6) and euler_characteristic(U) == 0
    R = disjoint_union(projective_plane(), projective_plane())
    assert euler_characteristic(R) == 2


def test_barycentric_refinement():
    p = closure([[0]])
    assert barycentric_refinement(p) == p
    assert f_vector(barycentric_refinement(closure([[1, 2]]))) == (3, 2)
    assert f_vector(barycentric_refinement(octahedron())) == (26, 72, 48)


@pytest.mark.parametrize("name", ["octahedron", "rp2", "simplex:4", "cycle:6", "c4-join-c4"])
def test_barycentric_matches_stirling_operator(name):
    G = example(name)
    q = G.dim
    A = barycentric_operator(q)
    f = G.f_vector
    expected = tuple(sum(A[i][j] * f[j] for j in range(q + 1)) for i in range(q + 1))
    assert f_vector(barycentric_refinement(G)) == expected


def test_edge_refinement_examples():
    C3 = cycle(3)
    R = edge_refinement(C3, C3.facets[0])
    assert f_vector(R) == (4, 4) and is_ds_sphere(R, 1)
    O = octahedron()
    R = edge_refinement(O, (0, 2))
    assert f_vector(R) == (7, 15, 10)
    assert is_ds_sphere(R, 2) and is_sphere(R, 2)
    assert f_vector(edge_refinement(full_simplex(3), (0, 1))) == (4, 5, 2)


def test_edge_refinement_errors():
    O = octahedron()
    with pytest.raises(ComplexError):
        edge_refinement(O, (0, 1))
    with pytest.raises(ComplexError):
        edge_refinement(O, (0, 2, 4))


def test_edge_refinement_f_change():
    # one new vertex; per y in the bone plus the empty face: +1 (via c), +2 and -1 one level up
    rng = random.Random(2)
    for G in (octahedron(), icosahedron(), torus(), cross_polytope(3)):
        e = rng.choice([x for x in G.simplices if len(x) == 2])
        a, b = e
        bone = [y for y in G.simplices if set(y).isdisjoint(e) and tuple(sorted(set(y) | set(e))) in G]
        f = list(G.f_vector) + [0, 0]
        f[0] += 1
        f[1] += 1  # y empty: edge {c}; edges {a,c},{b,c} replace {a,b}
        for y in bone:
            k = len(y) - 1
            f[k + 1] += 1
            f[k + 2] += 1
        R = edge_refinement(G, e)
        while f and f[-1] == 0:
            f.pop()
        assert R.f_vector == tuple(f)
        assert is_ds_manifold(R, G.dim) == is_ds_manifold(G, G.dim)


def test_cartesian_product():
    B = octahedron()
    P = cartesian_product(closure([[0]]), B)
    assert f_vector(P) == f_vector(barycentric_refinement(B))
    T = cartesian_product(cycle(4), cycle(4))
    assert euler_characteristic(T) == 0
    assert is_ds_manifold(T, 2)
    assert betti_vector(T) == (1, 2, 1)
    E = closure([[0, 1]])
    assert euler_characteristic(cartesian_product(E, E)) == 1
    with pytest.raises(ComplexError):
        cartesian_product(VOID, B)


def test_product_of_manifolds_is_manifold():
    P = cartesian_product(cycle(4), boundary_simplex(3))
    assert is_ds_manifold(P, 2)


def test_connected_sum():
    A = connected_sum(boundary_simplex(4), boundary_simplex(4))
    assert f_vector(A) == (5, 9, 6)
    assert is_ds_sphere(A, 2) and euler_characteristic(A) == 2
    O = octahedron()
    S = connected_sum(O, boundary_simplex(4))
    assert euler_characteristic(S) == euler_characteristic(O)
    T = connected_sum(torus(), torus())
    assert euler_characteristic(T) == -2
    assert betti_vector(T) == (1, 4, 1)
    assert is_ds_manifold(T, 2)


def test_connected_sum_errors():
    with pytest.raises(ComplexError):
        connected_sum(octahedron(), cycle(4))
    with pytest.raises(ComplexError):
        connected_sum(octahedron(), octahedron(), x=(0, 2))


def test_graph_edge_construction():
    S = graph_edge_construction(Graph(2, [(0, 1)]), cycle(5))
    assert f_vector(S) == (7, 15, 10) and euler_characteristic(S) == 2
    F = graph_edge_construction(complete_multipartite_graph(2, 2, 2), cycle(5))
    assert euler_characteristic(F) == 6
    assert betti_vector(F) == (1, 7, 12)
    D = graph_edge_construction(Graph(4, [(0, 1), (2, 3)]), cycle(4))
    assert euler_characteristic(D) == 4
    assert f_vector(D) == (12, 24, 16)
    with pytest.raises(ComplexError):
        graph_edge_construction(Graph(2, [(0, 1)]), VOID)


def test_whitney_complex():
    assert whitney_complex(complete_graph(3)) == full_simplex(3)
    assert f_vector(whitney_complex(cycle_graph(4))) == (4, 4)
    assert f_vector(whitney_complex(complete_multipartite_graph(2, 2, 2))) == (6, 12, 8)
    assert whitney_complex(Graph(0, [])) == VOID


def test_maximal_cliques_against_networkx():
    import networkx as nx

    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 12)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        ours = sorted(tuple(sorted(c)) for c in maximal_cliques(g))
        theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx()))
        assert ours == theirs


def test_join_of_spheres_is_sphere():
    spheres = [(VOID, -1), (TWO_POINTS, 0), (cycle(4), 1), (cycle(5), 1), (octahedron(), 2)]
    for A, p in spheres:
        for B, r in spheres:
            if p + r + 1 <= 3:
                assert is_ds_sphere(join(A, B), p + r + 1)


def test_library_entries_validate():
    assert is_ds_sphere(icosahedron(), 2)
    R = projective_plane()
    assert is_ds_manifold(R, 2) and euler_characteristic(R) == 1
    assert not is_ds_sphere(R, 2)
    assert betti_vector(torus()) == (1, 2, 1)
    assert f_vector(example("cross:3")) == (8, 24, 32, 16)
    with pytest.raises(KeyError):
        example("no-such-thing")
