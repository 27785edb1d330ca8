"""Finite abstract simplicial complexes and their Alexandrov topology.

A simplex is a strictly increasing tuple of nonnegative vertex ids.  A
:class:`Complex` stores the full closed set of simplices in canonical
order (by cardinality, then lexicographically); that order fixes every
matrix indexing used elsewhere in the package.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .graph import Graph

Simplex = tuple[int, ...]

__all__ = [
    "Complex",
    "ComplexError",
    "HyperbolicSplit",
    "OpenSet",
    "Simplex",
    "closure",
    "dim",
    "dump_complex",
    "euler_characteristic",
    "f_vector",
    "inclusion_graph",
    "load_complex",
    "omega",
    "order_complex",
    "simplex",
    "skeleton_graph",
    "stable_unstable",
    "star",
    "unit_sphere",
]


class ComplexError(ValueError):
    """Malformed simplex, or a simplex that is not in the host complex."""


def simplex(vertices: Iterable[int]) -> Simplex:
    """Validate and sort a vertex collection into a simplex."""
    vs = list(vertices)
    if not vs:
        raise ComplexError("a simplex must be nonempty")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ComplexError(f"vertex ids must be nonnegative integers, got {v!r}")
    out = tuple(sorted(vs))
    if len(set(out)) != len(out):
        raise ComplexError(f"duplicate vertex in simplex {vs}")
    return out


def dim(x: Sequence[int]) -> int:
    return len(x) - 1


def omega(x: Sequence[int]) -> int:
    """Parity (-1)^dim(x)."""
    return -1 if len(x) % 2 == 0 else 1


def _canonical_key(x: Simplex) -> tuple[int, Simplex]:
    return (len(x), x)


def _sorted_simplices(simplices: Iterable[Simplex]) -> tuple[Simplex, ...]:
    return tuple(sorted(set(simplices), key=_canonical_key))


@dataclass(frozen=True)
class Complex:
    """A closed finite set of simplices in canonical order.

    Construct through :func:`closure` (or :meth:`from_facets`); the
    constructor itself trusts that ``simplices`` is closed and sorted.
    """

    simplices: tuple[Simplex, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> Complex:
        return closure(facets)

    @classmethod
    def void(cls) -> Complex:
        return cls(())

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __repr__(self) -> str:
        return f"Complex(f={self.f_vector}, facets={len(self.facets)})"

    @cached_property
    def _members(self) -> frozenset[Simplex]:
        return frozenset(self.simplices)

    @cached_property
    def index(self) -> dict[Simplex, int]:
        """Position of each simplex in canonical order."""
        return {x: i for i, x in enumerate(self.simplices)}

    @property
    def dim(self) -> int:
        return len(self.simplices[-1]) - 1 if self.simplices else -1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(x[0] for x in self.simplices if len(x) == 1)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for x in self.simplices:
            counts[len(x) - 1] += 1
        return tuple(counts)

    @cached_property
    def facets(self) -> tuple[Simplex, ...]:
        """Maximal simplices in canonical order."""
        covered = {x[:i] + x[i + 1 :] for x in self.simplices if len(x) > 1 for i in range(len(x))}
        return tuple(x for x in self.simplices if x not in covered)

    @cached_property
    def _vertex_facets(self) -> dict[int, frozenset[Simplex]]:
        acc: dict[int, set[Simplex]] = {v: set() for v in self.vertices}
        for y in self.facets:
            for v in y:
                acc[v].add(y)
        return {v: frozenset(s) for v, s in acc.items()}

    def facets_through(self, x: Simplex) -> frozenset[Simplex]:
        """Facets containing ``x``."""
        sets = sorted((self._vertex_facets[v] for v in x), key=len)
        return sets[0].intersection(*sets[1:])

    @cached_property
    def _vertex_cofaces(self) -> dict[int, frozenset[Simplex]]:
        acc: dict[int, set[Simplex]] = {v: set() for v in self.vertices}
        for x in self.simplices:
            for v in x:
                acc[v].add(x)
        return {v: frozenset(s) for v, s in acc.items()}

    @cached_property
    def _cofaces(self) -> dict[Simplex, frozenset[Simplex]]:
        vc = self._vertex_cofaces
        out = {}
        for x in self.simplices:
            sets = sorted((vc[v] for v in x), key=len)
            out[x] = sets[0].intersection(*sets[1:])
        return out

    def cofaces(self, x: Simplex) -> frozenset[Simplex]:
        """All simplices containing ``x`` (the star as a plain set)."""
        self._require(x)
        return self._cofaces[x]

    @property
    def max_vertex(self) -> int:
        return self.vertices[-1] if self.simplices else -1

    def _require(self, x: Simplex) -> None:
        if x not in self._members:
            raise ComplexError(f"{x} is not a simplex of the complex")

    def relabel(self, mapping: dict[int, int] | None = None, shift: int = 0) -> Complex:
        """Rename vertices by ``mapping`` (default identity) plus ``shift``."""
        if mapping is None:
            return closure([tuple(v + shift for v in x) for x in self.facets])
        return closure([tuple(mapping[v] + shift for v in x) for x in self.facets])

    def normalized(self) -> Complex:
        """Relabel vertices 0..n-1 in order of first appearance."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def subcomplex(self, simplices: Iterable[Simplex]) -> Complex:
        """Wrap a subset known to be closed, re-sorting it."""
        return Complex(_sorted_simplices(simplices))

    def minus(self, members: Iterable[Simplex]) -> Complex:
        """Complement of an open set; closed whenever ``members`` is open."""
        drop = set(members)
        return Complex(tuple(x for x in self.simplices if x not in drop))

    def to_json(self) -> dict:
        return {"facets": [list(x) for x in self.facets]}


@dataclass(frozen=True)
class OpenSet:
    """Subset of a host complex closed under taking supersets in the host."""

    host: Complex
    members: frozenset[Simplex] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for x in self.members:
            if x not in self.host:
                raise ComplexError(f"{x} is not in the host complex")
        if not self.is_open():
            raise ComplexError("an open set must contain every coface of its members")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted())

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def sorted(self) -> tuple[Simplex, ...]:
        return tuple(sorted(self.members, key=_canonical_key))

    def is_open(self) -> bool:
        return all(self.host.cofaces(x) <= self.members for x in self.members)

    def closure(self) -> Complex:
        return closure(self.members)

    def boundary(self) -> Complex:
        """Topological boundary: closure minus the set itself."""
        return self.closure().minus(self.members)

    def union(self, other: OpenSet) -> OpenSet:
        return OpenSet(self.host, self.members | other.members)

    def intersection(self, other: OpenSet) -> OpenSet:
        return OpenSet(self.host, self.members & other.members)


def closure(facets: Iterable[Iterable[int]]) -> Complex:
    """Smallest complex containing every given simplex."""
    out: set[Simplex] = set()
    for raw in facets:
        x = simplex(raw)
        if x in out:
            continue
        for r in range(1, len(x) + 1):
            out.update(combinations(x, r))
    return Complex(_sorted_simplices(out))


def star(G: Complex, x: Simplex) -> OpenSet:
    """U(x): every simplex of G that contains x."""
    return OpenSet(G, G.cofaces(tuple(x)))


def unit_sphere(G: Complex, x: Simplex) -> Complex:
    """S(x) = closure(U(x)) minus U(x).

    Built as {a | b : a a proper face of x (possibly empty), b empty or in
    the link of x}, which enumerates each simplex once.
    """
    x = tuple(x)
    xs = set(x)
    rest = [tuple(v for v in y if v not in xs) for y in G.cofaces(x) if len(y) > len(x)]
    rest.append(())
    out: list[Simplex] = []
    for r in range(len(x)):
        for a in combinations(x, r):
            for b in rest:
                if a or b:
                    out.append(tuple(sorted(a + b)))
    return Complex(_sorted_simplices(out))


def link(G: Complex, x: Simplex) -> Complex:
    """Join factor {y - x : y strictly contains x}."""
    x = tuple(x)
    xs = set(x)
    return Complex(
        _sorted_simplices(tuple(v for v in y if v not in xs) for y in G.cofaces(x) if y != x)
    )


def order_complex(simplices: Iterable[Simplex], labels: Sequence[Simplex] | None = None) -> Complex:
    """Whitney complex of the strict-inclusion graph on a set of simplices.

    Vertex i of the result is ``labels[i]``; by default the members sorted
    canonically.  Simplices of the result are chains.
    """
    if labels is None:
        labels = tuple(sorted(set(simplices), key=_canonical_key))
    from .build import whitney_complex

    return whitney_complex(_inclusion_graph(labels))


def _inclusion_graph(labels: Sequence[Simplex]) -> Graph:
    pos = {x: i for i, x in enumerate(labels)}
    edges = []
    for y in labels:
        j = pos[y]
        for r in range(1, len(y)):
            for z in combinations(y, r):
                i = pos.get(z)
                if i is not None:
                    edges.append((i, j))
    return Graph(len(labels), edges)


@dataclass(frozen=True)
class HyperbolicSplit:
    """S(x) = S^-(x) (+) S^+(x) for one simplex x.

    ``stable`` is the boundary complex of x, ``unstable`` the open set of
    strict cofaces, ``unstable_complex`` its order complex, and ``link`` the
    join factor whose join with ``stable`` equals the unit sphere.
    """

    stable: Complex
    unstable: frozenset[Simplex]
    unstable_complex: Complex
    link: Complex


def stable_unstable(G: Complex, x: Simplex) -> HyperbolicSplit:
    x = tuple(x)
    G._require(x)
    stable = closure(combinations(x, len(x) - 1)) if len(x) > 1 else Complex.void()
    unstable = frozenset(y for y in G.cofaces(x) if y != x)
    return HyperbolicSplit(stable, unstable, order_complex(unstable), link(G, x))


def f_vector(G: Complex) -> tuple[int, ...]:
    return G.f_vector


def euler_characteristic(A: Complex | OpenSet | Iterable[Simplex]) -> int:
    """Sum of (-1)^dim over any finite set of simplices."""
    if isinstance(A, OpenSet):
        A = A.members
    return sum(omega(x) for x in A)


def skeleton_graph(G: Complex) -> Graph:
    """1-skeleton: vertices of G (relabelled 0..n-1 in order) and its edges."""
    pos = {v: i for i, v in enumerate(G.vertices)}
    return Graph(
        len(pos),
        [(pos[x[0]], pos[x[1]]) for x in G.simplices if len(x) == 2],
        labels=G.vertices,
    )


def inclusion_graph(G: Complex) -> Graph:
    """Graph on all simplices (canonical index) joined by strict containment."""
    return _inclusion_graph(G.simplices)


def load_complex(source) -> Complex:
    """Read the ``{"facets": [...]}`` format from a path, file, JSON text or dict."""
    if isinstance(source, dict):
        data = source
    elif isinstance(source, str) and source.lstrip().startswith("{"):
        data = json.loads(source)
    elif hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source) as fh:
            data = json.load(fh)
    if not isinstance(data, dict) or "facets" not in data:
        raise ComplexError('expected an object with a "facets" list')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(x, list) for x in facets):
        raise ComplexError('"facets" must be a list of integer lists')
    return closure(facets)


def dump_complex(G: Complex) -> str:
    return json.dumps(G.to_json(), sort_keys=True)
