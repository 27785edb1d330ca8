"""Level sets of vertex functions g: V -> {0, ..., k}.

A simplex x carries the value set g(x) = {g(v) : v in x}; the level set is
the open set of simplices on which every value is attained.  Open sets are
classified through their order complex.
"""

from __future__ import annotations

import random
from collections.abc import Mapping
from dataclasses import dataclass

from .core import Complex, OpenSet, Simplex, order_complex

__all__ = [
    "LevelReport",
    "VertexFunction",
    "level_complex",
    "level_set",
    "manifold_with_boundary_level",
    "random_vertex_function",
    "verify_level_theorem",
]


@dataclass(frozen=True)
class VertexFunction:
    values: Mapping[int, int]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        for v, a in self.values.items():
            if not 0 <= a <= self.k:
                raise ValueError(f"value {a} at vertex {v} outside 0..{self.k}")

    def check_total(self, G: Complex) -> None:
        missing = [v for v in G.vertices if v not in self.values]
        if missing:
            raise ValueError(f"vertex function undefined at {missing[:5]}")

    def image(self, x: Simplex) -> frozenset[int]:
        return frozenset(self.values[v] for v in x)


def random_vertex_function(G: Complex, k: int, rng: random.Random) -> VertexFunction:
    return VertexFunction({v: rng.randint(0, k) for v in G.vertices}, k)


def level_set(G: Complex, g: VertexFunction) -> OpenSet:
    """{x in G : g(x) = {0, ..., k}}."""
    g.check_total(G)
    full = frozenset(range(g.k + 1))
    return OpenSet(G, frozenset(x for x in G.simplices if g.image(x) == full))


def level_complex(G: Complex, g: VertexFunction) -> Complex:
    """Order complex of the level set; vertex i is the i-th member in canonical order."""
    return order_complex(level_set(G, g).members)


@dataclass(frozen=True)
class LevelReport:
    q: int
    k: int
    precondition: str
    empty: bool
    verdict: bool
    facet_dims: tuple[int, ...]
    boundary_verdict: bool | None = None
    boundary_dims: tuple[int, ...] = ()

    @property
    def holds(self) -> bool:
        return self.precondition != "none" and self.verdict and self.boundary_verdict is not False

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "precondition": self.precondition,
            "empty": self.empty,
            "verdict": self.verdict,
            "facet_dims": list(self.facet_dims),
            "boundary_verdict": self.boundary_verdict,
            "boundary_dims": list(self.boundary_dims),
            "holds": self.holds,
        }


def _dims(G: Complex) -> tuple[int, ...]:
    return tuple(sorted({len(x) - 1 for x in G.facets}))


def verify_level_theorem(G: Complex, g: VertexFunction, q: int | None = None) -> LevelReport:
    """Nonempty level sets of DS q-manifolds (varieties) are DS (q-k)-manifolds (varieties)."""
    from .classify import is_ds_manifold, is_ds_variety

    q = G.dim if q is None else q
    if is_ds_manifold(G, q):
        pre, test = "ds-manifold", is_ds_manifold
    elif is_ds_variety(G, q):
        pre, test = "ds-variety", is_ds_variety
    else:
        pre, test = "none", None
    L = level_complex(G, g)
    if not L.simplices:
        return LevelReport(q, g.k, pre, True, pre != "none", ())
    ok = test is not None and test(L, q - g.k)
    return LevelReport(q, g.k, pre, False, bool(ok), _dims(L))


def manifold_with_boundary_level(G: Complex, g: VertexFunction, k: int | None = None) -> LevelReport:
    """Classify the order complex of {x : g(x) contains {1, ..., k}}.

    The dimension is read off the result rather than assumed; for a DS
    q-manifold it comes out as q - k + 1, with a (q - k)-dimensional boundary.
    """
    from .classify import boundary, is_ds_manifold, is_ds_manifold_with_boundary

    k = g.k if k is None else k
    g.check_total(G)
    need = frozenset(range(1, k + 1))
    members = [x for x in G.simplices if need <= g.image(x)]
    q = G.dim
    pre = "ds-manifold" if is_ds_manifold(G, q) else "none"
    if not members:
        return LevelReport(q, k, pre, True, pre != "none", ())
    L = order_complex(members)
    d = L.dim
    ok = is_ds_manifold_with_boundary(L, d)
    B = boundary(L, d)
    bok = is_ds_manifold(B, d - 1) if B.simplices else None
    return LevelReport(q, k, pre, False, ok, _dims(L), bok, _dims(B))


def unstable_agrees(G: Complex, g: VertexFunction) -> bool:
    """Proper cofaces of x inside the level set equal those in G."""
    L = level_set(G, g)
    return all({y for y in G.cofaces(x) if y != x} <= L.members for x in L.members)
