"""Constructions: join, suspension, products, refinements, connected sums.

Binary constructions shift the second operand's vertex ids above the
first operand's maximum; constructions that need fresh vertices allocate
them above the current maximum.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from itertools import combinations, product

from .core import Complex, ComplexError, Simplex, _sorted_simplices, closure, unit_sphere
from .graph import Graph

__all__ = [
    "cartesian_product",
    "cone",
    "connected_sum",
    "disjoint_union",
    "barycentric_refinement",
    "edge_refinement",
    "graph_edge_construction",
    "join",
    "maximal_cliques",
    "suspension",
    "whitney_complex",
]


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting; cliques as sorted tuples."""
    if g.n == 0:
        return []
    adj = g.adjacency
    out: list[tuple[int, ...]] = []
    # explicit stack keeps deep graphs off the recursion limit
    stack = [((), set(range(g.n)), set())]
    while stack:
        R, P, X = stack.pop()
        if not P:
            if not X:
                out.append(tuple(sorted(R)))
            continue
        pivot = max(P | X, key=lambda u: len(adj[u] & P))
        for v in list(P - adj[pivot]):
            stack.append((R + (v,), P & adj[v], X & adj[v]))
            P = P - {v}
            X = X | {v}
    return sorted(out)


def whitney_complex(g: Graph) -> Complex:
    """Flag complex: every vertex set of a complete subgraph."""
    return closure(maximal_cliques(g))


def _shift(G: Complex, by: int) -> list[Simplex]:
    return [tuple(v + by for v in x) for x in G.facets]


def join(A: Complex, B: Complex) -> Complex:
    """A + B + {a u b}; the f-polynomial of the result is f_A * f_B."""
    fb = _shift(B, A.max_vertex + 1)
    if not A.simplices:
        return closure(fb)
    if not B.simplices:
        return A
    return closure(a + b for a in A.facets for b in fb)


def suspension(G: Complex) -> Complex:
    return join(G, closure([(0,), (1,)]))


def cone(G: Complex) -> Complex:
    return join(G, closure([(0,)]))


def disjoint_union(A: Complex, B: Complex) -> Complex:
    return closure(list(A.facets) + _shift(B, A.max_vertex + 1))


def barycentric_refinement(G: Complex) -> Complex:
    """Order complex of G; vertex i stands for the i-th simplex of G."""
    from .core import inclusion_graph

    return whitney_complex(inclusion_graph(G))


def edge_refinement(G: Complex, e: Iterable[int]) -> Complex:
    """Subdivide edge e = (a, b) by a new vertex c = max vertex + 1."""
    e = tuple(sorted(e))
    if len(e) != 2:
        raise ComplexError(f"edge refinement needs a 1-simplex, got {e}")
    if e not in G:
        raise ComplexError(f"{e} is not an edge of the complex")
    a, b = e
    c = G.max_vertex + 1
    containing = G.cofaces(e)
    keep = [x for x in G.simplices if x not in containing]
    added = []
    for z in containing:
        y = tuple(v for v in z if v != a and v != b)
        added.append(tuple(sorted(y + (a, c))))
        added.append(tuple(sorted(y + (b, c))))
        added.append(tuple(sorted(y + (c,))))
    return Complex(_sorted_simplices(keep + added))


def cartesian_product(A: Complex, B: Complex) -> Complex:
    """Whitney complex of the product order on pairs (x, y).

    Pair (A.simplices[i], B.simplices[j]) becomes vertex i * len(B) + j.
    """
    if not A.simplices or not B.simplices:
        raise ComplexError("cartesian product needs two nonvoid complexes")
    na, nb = len(A), len(B)

    def below(G: Complex) -> list[list[int]]:
        # indices of proper faces, per simplex
        idx = G.index
        return [
            [idx[z] for r in range(1, len(x)) for z in combinations(x, r)]
            for x in G.simplices
        ]

    la, lb = below(A), below(B)
    edges = []
    for i, j in product(range(na), range(nb)):
        v = i * nb + j
        fa = la[i] + [i]
        fb = lb[j] + [j]
        for i2 in fa:
            for j2 in fb:
                w = i2 * nb + j2
                if w != v:
                    edges.append((w, v))
    return whitney_complex(Graph(na * nb, edges))


def connected_sum(
    A: Complex,
    B: Complex,
    x: Iterable[int] | None = None,
    y: Iterable[int] | None = None,
    matching: Mapping[int, int] | None = None,
) -> Complex:
    """Remove facets x of A and y of B and glue along their boundaries.

    ``matching`` maps vertices of y to vertices of x; the default pairs them
    in sorted order.  Vertices of B outside y get fresh ids above A.
    """
    q = A.dim
    if B.dim != q:
        raise ComplexError(f"dimension mismatch: {q} vs {B.dim}")
    x = tuple(sorted(x)) if x is not None else next(s for s in A.facets if len(s) == q + 1)
    y = tuple(sorted(y)) if y is not None else next(s for s in B.facets if len(s) == q + 1)
    for name, G, s in (("x", A, x), ("y", B, y)):
        if s not in G or len(s) != q + 1:
            raise ComplexError(f"{name}={s} is not a top-dimensional facet")
        if len(G.cofaces(s)) != 1:
            raise ComplexError(f"{name}={s} is not maximal")
    if matching is None:
        matching = dict(zip(y, x))
    if sorted(matching) != list(y) or sorted(matching.values()) != list(x):
        raise ComplexError("matching must be a bijection from y onto x")
    fresh = A.max_vertex + 1
    relabel = dict(matching)
    for v in B.vertices:
        if v not in relabel:
            relabel[v] = fresh
            fresh += 1
    moved = [tuple(sorted(relabel[v] for v in s)) for s in B.simplices if s != y]
    kept = [s for s in A.simplices if s != x]
    return Complex(_sorted_simplices(kept + moved))


def graph_edge_construction(gamma: Graph, M: Complex) -> Complex:
    """Replace every edge (a, b) of a graph by a fresh copy of M joined with {a, b}.

    Graph vertex i keeps id i; copies are glued only at these poles.
    Isolated graph vertices survive as isolated points.
    """
    if not M.simplices:
        raise ComplexError("M must be nonvoid")
    facets: list[Simplex] = [(v,) for v in range(gamma.n) if gamma.degree(v) == 0]
    base = gamma.n
    span = M.max_vertex + 1
    for k, (a, b) in enumerate(gamma.edges):
        shift = base + k * span
        for m in M.facets:
            mm = tuple(v + shift for v in m)
            facets.append((a,) + mm)
            facets.append((b,) + mm)
    return closure(facets)


def vertex_star_ball(G: Complex, v: int) -> Complex:
    """Closed star B(v) of a vertex."""
    return closure(G.cofaces((v,)))


def bone(G: Complex, e: Simplex) -> Complex:
    """S(a) n S(b) for an edge e = (a, b)."""
    a, b = e
    sa, sb = unit_sphere(G, (a,)), unit_sphere(G, (b,))
    return Complex(tuple(x for x in sa.simplices if x in sb))
