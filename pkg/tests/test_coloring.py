import itertools

import pytest

from dscomplex.build import barycentric_refinement
from dscomplex.coloring import (
    chromatic_bound_check,
    chromatic_number,
    dual_graph,
    dual_regularity_check,
    forest_coloring,
    hamiltonicity_check,
    is_proper_coloring,
    two_forest_partition,
    vertex_arboricity_two_check,
)
from dscomplex.core import closure, skeleton_graph
from dscomplex.graph import Graph, complete_graph, cycle_graph, isomorphic
from dscomplex.library import (
    cross_polytope,
    cube_graph,
    dodecahedron_graph,
    example,
    octahedral_pentagons,
    full_simplex,
    icosahedron,
    octahedron,
    projective_plane,
    torus,
)


def _brute_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if is_proper_coloring(g, colors):
                return k
    return 0


def _induces_forest(g: Graph, verts) -> bool:
    h = g.induced(verts)
    return len(h.edges) == h.n - len(h.components())


def test_dual_graph_examples():
    D = dual_graph(octahedron())
    assert (D.n, len(D.edges)) == (8, 12)
    assert isomorphic(D, cube_graph())
    assert isomorphic(dual_graph(icosahedron()), dodecahedron_graph())
    D = dual_graph(full_simplex(3))
    assert (D.n, D.edges) == (1, ())


def test_dual_regularity():
    for G in (octahedron(), icosahedron(), cross_polytope(3), torus(), projective_plane()):
        r = dual_regularity_check(G)
        assert r.ok and r.regular_degree == G.dim + 1
    r = dual_regularity_check(closure([[0, 1, 2], [1, 2, 3]]))
    assert not r.precondition and not r.ok


def test_chromatic_examples():
    assert chromatic_number(skeleton_graph(octahedron())).value == 3
    assert chromatic_number(complete_graph(5)).value == 5
    for G in (octahedron(), full_simplex(3), projective_plane()):
        q = G.dim
        r = chromatic_number(skeleton_graph(barycentric_refinement(G)))
        assert r.value is not None and r.value <= q + 1


def test_chromatic_against_brute_force():
    import random

    rng = random.Random(8)
    for _ in range(25):
        n = rng.randint(1, 7)
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
        r = chromatic_number(g)
        assert r.exact and r.value == _brute_chromatic(g)
        assert is_proper_coloring(g, r.coloring)


def test_chromatic_budget_is_reported():
    g = skeleton_graph(octahedral_pentagons())
    r = chromatic_number(g, budget=0)
    assert r.lower <= r.upper
    if not r.exact:
        assert r.value is None


def test_vertex_arboricity():
    assert vertex_arboricity_two_check(cube_graph()) is True
    assert vertex_arboricity_two_check(dodecahedron_graph()) is True
    assert vertex_arboricity_two_check(complete_graph(4)) is True
    assert vertex_arboricity_two_check(complete_graph(5)) is False
    assert vertex_arboricity_two_check(complete_graph(7)) is False
    parts, exhausted = two_forest_partition(cube_graph())
    assert not exhausted
    for side in (0, 1):
        assert _induces_forest(cube_graph(), [v for v in range(8) if parts[v] == side])


def test_arboricity_budget():
    parts, exhausted = two_forest_partition(complete_graph(8), budget=3)
    assert parts is None and exhausted
    assert vertex_arboricity_two_check(complete_graph(8), budget=3) is None


@pytest.mark.parametrize("name", ["octahedron", "icosahedron", "rp2", "torus", "cross:3", "c4-join-c4", "octahedral-pentagons"])
def test_dual_graphs_split_into_two_forests(name):
    G = example(name)
    assert vertex_arboricity_two_check(dual_graph(G)) is True


def test_forest_coloring():
    for name in ("octahedron", "cross:3", "c4-join-c4"):
        G = example(name)
        D = dual_graph(G)
        parts, _ = two_forest_partition(D)
        col = forest_coloring(G, parts)
        assert col is not None
        sk = skeleton_graph(G)
        assert is_proper_coloring(sk, [col[v] for v in sk.labels])
        assert len(set(col.values())) <= 2 * G.dim + 2


def test_chromatic_bound_examples():
    for name in ("octahedron", "rp2", "octahedral-pentagons", "icosahedron", "cross:3"):
        r = chromatic_bound_check(example(name))
        assert r.precondition and r.ok and r.chromatic.exact
    assert chromatic_bound_check(octahedron()).chromatic.value == 3
    assert chromatic_bound_check(projective_plane()).chromatic.value == 6


def test_torus_exceeds_bound():
    # the 7-vertex torus has K7 as its skeleton
    r = chromatic_bound_check(torus())
    assert r.precondition
    assert r.chromatic.value == 7 > 2 * 2 + 2
    assert not r.ok


def test_hamiltonicity():
    assert hamiltonicity_check(cycle_graph(5)) is True
    assert hamiltonicity_check(cube_graph()) is True
    assert hamiltonicity_check(dodecahedron_graph()) is True
    assert hamiltonicity_check(Graph(4, [(0, 1), (1, 2), (2, 3)])) is False
    assert hamiltonicity_check(complete_graph(2)) is False


@pytest.mark.slow
def test_octahedral_pentagons_not_hamiltonian():
    g = skeleton_graph(octahedral_pentagons())
    assert hamiltonicity_check(g, budget=5_000_000) is False
    # certificate: deleting the 6 poles leaves one circle per graph edge
    poles = sorted(range(g.n), key=lambda v: -g.degree(v))[:6]
    rest = [v for v in range(g.n) if v not in poles]
    assert len(g.induced(rest).components()) == 12 > len(poles)


def _brute_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    for perm in itertools.permutations(range(1, g.n)):
        cyc = (0, *perm, 0)
        if all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:])):
            return True
    return False


def test_hamiltonicity_against_brute_force():
    import random

    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(3, 8)
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.55])
        assert hamiltonicity_check(g) == _brute_hamiltonian(g)
