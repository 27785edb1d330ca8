"""Named example complexes.

Parametric names take an integer suffix after a colon, e.g. ``cycle:5``
or ``cross:3``.  Hand-typed facet lists (icosahedron, projective plane,
torus) are checked against their expected invariants the first time they
are requested.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product

from .build import disjoint_union, graph_edge_construction, join, suspension
from .core import Complex, ComplexError, closure
from .graph import Graph, complete_multipartite_graph, cycle_graph

__all__ = [
    "boundary_simplex",
    "cross_polytope",
    "cube_graph",
    "cycle",
    "dodecahedron_graph",
    "example",
    "example_names",
    "octahedral_pentagons",
    "full_simplex",
    "graph_complex",
    "icosahedron",
    "octahedron",
    "projective_plane",
    "star_graph",
    "torus",
]


def cycle(n: int) -> Complex:
    if n < 3:
        raise ComplexError("a cycle needs at least 3 vertices")
    return closure([(i, (i + 1) % n) for i in range(n)])


def full_simplex(n: int) -> Complex:
    """K_n: one (n-1)-simplex on vertices 0..n-1 with all its faces."""
    if n < 1:
        raise ComplexError("K_n needs n >= 1")
    return closure([tuple(range(n))])


def boundary_simplex(n: int) -> Complex:
    """dK_n: proper faces of an (n-1)-simplex, a sphere of dimension n-2."""
    if n < 2:
        raise ComplexError("dK_n needs n >= 2")
    return closure([tuple(v for v in range(n) if v != i) for i in range(n)])


def cross_polytope(q: int) -> Complex:
    """Join of q+1 two-point complexes; vertices 2i, 2i+1 are antipodal."""
    if q < 0:
        return Complex.void()
    return closure([tuple(2 * i + b for i, b in enumerate(bits)) for bits in product((0, 1), repeat=q + 1)])


def octahedron() -> Complex:
    return cross_polytope(2)


_ICOSAHEDRON = (
    [(0, 1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(11, 6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 1 + (i + 1) % 5, 6 + i) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5, 1 + (i + 1) % 5) for i in range(5)]
)

_PROJECTIVE_PLANE = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
]

_TORUS = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [
    (i, (i + 2) % 7, (i + 3) % 7) for i in range(7)
]


@lru_cache(maxsize=None)
def _checked(name: str, facets: tuple, f: tuple, chi: int, sphere: bool) -> Complex:
    from .classify import is_manifold, is_sphere

    G = closure(facets)
    ok = G.f_vector == f and sum((-1) ** k * c for k, c in enumerate(f)) == chi
    ok = ok and is_manifold(G, 2) is True
    ok = ok and (is_sphere(G, 2) is True) == sphere
    if not ok:
        raise ComplexError(f"embedded facet list for {name} failed validation")
    return G


def icosahedron() -> Complex:
    return _checked("icosahedron", tuple(_ICOSAHEDRON), (12, 30, 20), 2, True)


def projective_plane() -> Complex:
    """Six-vertex real projective plane."""
    return _checked("rp2", tuple(_PROJECTIVE_PLANE), (6, 15, 10), 1, False)


def torus() -> Complex:
    """Seven-vertex torus."""
    return _checked("torus", tuple(_TORUS), (7, 21, 14), 0, False)


def star_graph(n: int) -> Graph:
    """Center 0 joined to leaves 1..n."""
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def cube_graph() -> Graph:
    return Graph(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def dodecahedron_graph() -> Graph:
    """Generalized Petersen graph GP(10, 2)."""
    outer = [(i, (i + 1) % 10) for i in range(10)]
    spokes = [(i, 10 + i) for i in range(10)]
    inner = [(10 + i, 10 + (i + 2) % 10) for i in range(10)]
    return Graph(20, outer + spokes + inner)


def graph_complex(g: Graph) -> Complex:
    """A graph as a complex of dimension at most 1."""
    return closure([(v,) for v in range(g.n)] + [e for e in g.edges])


def octahedral_pentagons() -> Complex:
    """Edges of the octahedron graph each replaced by a suspended pentagon."""
    return graph_edge_construction(complete_multipartite_graph(2, 2, 2), cycle(5))


_FIXED = {
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "rp2": projective_plane,
    "torus": torus,
    "cube-graph": lambda: graph_complex(cube_graph()),
    "dodecahedron-graph": lambda: graph_complex(dodecahedron_graph()),
    "point": lambda: full_simplex(1),
    "void": Complex.void,
    "rp2+rp2": lambda: disjoint_union(projective_plane(), projective_plane()),
    "suspension-rp2+rp2": lambda: suspension(disjoint_union(projective_plane(), projective_plane())),
    "c4-join-c4": lambda: join(cycle(4), cycle(4)),
    "octahedral-pentagons": octahedral_pentagons,
}

_PARAMETRIC = {
    "cycle": cycle,
    "simplex": full_simplex,
    "boundary": boundary_simplex,
    "cross": cross_polytope,
    "star-graph": lambda n: graph_complex(star_graph(n)),
    "cycle-graph": lambda n: graph_complex(cycle_graph(n)),
}


def example_names() -> list[str]:
    return sorted(_FIXED) + sorted(f"{k}:<n>" for k in _PARAMETRIC)


def example(name: str) -> Complex:
    """Look up a library complex by name."""
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"([a-z-]+):(\d+)", name)
    if m and m.group(1) in _PARAMETRIC:
        return _PARAMETRIC[m.group(1)](int(m.group(2)))
    raise KeyError(f"unknown example {name!r}; known: {', '.join(example_names())}")
