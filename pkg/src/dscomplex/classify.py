"""Recursive Dehn-Sommerville predicates and classical sphere/manifold tests.

The Dehn-Sommerville predicates are decided exactly.  The classical ones
(``is_contractible``, ``is_sphere``, ``is_manifold``) search for a witness
vertex or simplex and may give up: they return ``True``, ``False`` or
``None`` (unknown once the node budget is spent).
"""

from __future__ import annotations

import os
import threading
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field

from .core import Complex, closure, euler_characteristic, link, unit_sphere

__all__ = [
    "Budget",
    "ClassificationCache",
    "boundary",
    "default_cache",
    "is_contractible",
    "is_ds_manifold",
    "is_ds_manifold_with_boundary",
    "is_ds_sphere",
    "is_ds_variety",
    "is_ds_variety_links",
    "is_manifold",
    "is_sphere",
    "sphere_formula_check",
]

DEFAULT_BUDGET = 20000


def canonical_key(G: Complex) -> tuple:
    """Vertices renamed 0, 1, ... in order of first appearance."""
    ren: dict[int, int] = {}
    for x in G.simplices:
        for v in x:
            if v not in ren:
                ren[v] = len(ren)
    return tuple(tuple(ren[v] for v in x) for x in G.facets)


class ClassificationCache:
    """Thread-safe memo of verdicts keyed by (predicate, q, canonical key).

    Only definite verdicts are stored, so a cached entry never depends on
    the budget that produced it.
    """

    def __init__(self) -> None:
        self._table: dict[tuple, bool] = {}
        self._lock = threading.Lock()
        self.stats: Counter = Counter()

    def get(self, key: tuple) -> bool | None:
        with self._lock:
            v = self._table.get(key)
            self.stats["hits" if v is not None else "misses"] += 1
            return v

    def put(self, key: tuple, value: bool | None) -> None:
        if value is None:
            return
        with self._lock:
            self._table.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()
            self.stats.clear()

    def __len__(self) -> int:
        return len(self._table)


default_cache = ClassificationCache()


@dataclass
class Budget:
    """Node counter shared across one top-level search."""

    limit: int = field(default_factory=lambda: int(os.environ.get("DSCOMPLEX_BUDGET", DEFAULT_BUDGET)))
    used: int = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _memo(name: str, G: Complex, q, cache: ClassificationCache | None, compute: Callable[[], bool | None]):
    cache = default_cache if cache is None else cache
    key = (name, q, canonical_key(G))
    hit = cache.get(key)
    if hit is not None:
        return hit
    v = compute()
    cache.put(key, v)
    return v


def _q(G: Complex, q: int | None) -> int:
    return G.dim if q is None else q


def is_ds_sphere(G: Complex, q: int | None = None, cache: ClassificationCache | None = None) -> bool:
    """Every unit sphere is a DS (q-1)-sphere and chi(G) = 1 + (-1)^q."""
    q = _q(G, q)
    if not G.simplices:
        return q == -1
    if G.dim != q or euler_characteristic(G) != 1 + (-1) ** q:
        return False
    return _memo("ds-sphere", G, q, cache, lambda: _all_spheres(G, q, cache))


def _link_key(G: Complex, x) -> tuple:
    """Renaming-invariant key of the link of x, built from the facets through x."""
    xs = set(x)
    rest = sorted((tuple(v for v in y if v not in xs) for y in G.facets_through(x)), key=lambda y: (len(y), y))
    ren: dict[int, int] = {}
    return tuple(tuple(ren.setdefault(v, len(ren)) for v in y) for y in rest)


def _all_spheres(G: Complex, q: int, cache) -> bool:
    # S(x) is determined up to renaming by |x| and the link of x
    cache = default_cache if cache is None else cache
    seen = set()
    for x in G.simplices:
        key = ("unit-sphere", q - 1, len(x), _link_key(G, x))
        if key in seen:
            continue
        seen.add(key)
        v = cache.get(key)
        if v is None:
            v = is_ds_sphere(unit_sphere(G, x), q - 1, cache)
            cache.put(key, v)
        if not v:
            return False
    return True


def is_ds_manifold(G: Complex, q: int | None = None, cache: ClassificationCache | None = None) -> bool:
    """Nonvoid, of dimension q, every unit sphere a DS (q-1)-sphere."""
    q = _q(G, q)
    if not G.simplices or G.dim != q:
        return False
    return _memo("ds-manifold", G, q, cache, lambda: _all_spheres(G, q, cache))


def is_ds_variety(G: Complex, q: int | None = None, cache: ClassificationCache | None = None) -> bool:
    """Void iff q = -1; otherwise dimension q and every S(x) a DS (q-1)-variety."""
    q = _q(G, q)
    if not G.simplices:
        return q == -1
    if G.dim != q:
        return False
    return _memo(
        "ds-variety",
        G,
        q,
        cache,
        lambda: all(is_ds_variety(unit_sphere(G, x), q - 1, cache) for x in G.simplices),
    )


def is_ds_variety_links(G: Complex, q: int | None = None, cache: ClassificationCache | None = None) -> bool:
    """Variant through links: link(x) is a DS (q - dim x - 1)-variety for every x."""
    q = _q(G, q)
    if not G.simplices:
        return q == -1
    if G.dim != q:
        return False
    return _memo(
        "ds-variety-links",
        G,
        q,
        cache,
        lambda: all(is_ds_variety_links(link(G, x), q - len(x), cache) for x in G.simplices),
    )


def _is_cone(G: Complex) -> bool:
    facets = G.facets
    common = set(facets[0]).intersection(*facets[1:])
    return bool(common)


def _rationally_acyclic(G: Complex) -> bool:
    from .cohomology import betti_vector

    b = betti_vector(G)
    return b[0] == 1 and not any(b[1:])


def is_contractible(
    G: Complex, cache: ClassificationCache | None = None, budget: Budget | None = None
) -> bool | None:
    """The one-point complex, or some x with S(x) and G minus U(x) contractible.

    Cheap refutations first (Euler characteristic, rational homology), cones
    accepted outright; ``None`` when the budget runs out before a verdict.
    """
    if not G.simplices:
        return False
    if len(G) == 1:
        return True
    if euler_characteristic(G) != 1:
        return False
    budget = Budget() if budget is None else budget
    cache = default_cache if cache is None else cache
    key = ("contractible", None, canonical_key(G))
    hit = cache.get(key)
    if hit is not None:
        return hit
    if _is_cone(G):
        cache.put(key, True)
        return True
    if not _rationally_acyclic(G):
        cache.put(key, False)
        return False
    unknown = False
    # vertices first, then higher simplices, in canonical order
    for x in G.simplices:
        if not budget.spend():
            return None
        rest = G.minus(G.cofaces(x))
        r = is_contractible(rest, cache, budget)
        if r is None:
            unknown = True
            continue
        if not r:
            continue
        s = is_contractible(unit_sphere(G, x), cache, budget)
        if s:
            cache.put(key, True)
            return True
        if s is None:
            unknown = True
    verdict = None if unknown else False
    cache.put(key, verdict)
    return verdict


def _all3(values) -> bool | None:
    unknown = False
    for v in values:
        if v is False:
            return False
        if v is None:
            unknown = True
    return None if unknown else True


def is_manifold(
    G: Complex, q: int | None = None, cache: ClassificationCache | None = None, budget: Budget | None = None
) -> bool | None:
    """Every unit sphere is a (q-1)-sphere."""
    q = _q(G, q)
    if not G.simplices or G.dim != q:
        return False
    if not is_ds_manifold(G, q, cache):
        return False
    budget = Budget() if budget is None else budget
    cache_ = default_cache if cache is None else cache
    key = ("manifold", q, canonical_key(G))
    hit = cache_.get(key)
    if hit is not None:
        return hit
    v = _all3(is_sphere(unit_sphere(G, x), q - 1, cache, budget) for x in G.simplices)
    cache_.put(key, v)
    return v


def is_sphere(
    G: Complex, q: int | None = None, cache: ClassificationCache | None = None, budget: Budget | None = None
) -> bool | None:
    """A q-manifold with some x for which G minus U(x) is contractible."""
    q = _q(G, q)
    if q == -1:
        return not G.simplices
    if not is_ds_sphere(G, q, cache):
        return False
    budget = Budget() if budget is None else budget
    cache_ = default_cache if cache is None else cache
    key = ("sphere", q, canonical_key(G))
    hit = cache_.get(key)
    if hit is not None:
        return hit
    m = is_manifold(G, q, cache, budget)
    if m is not True:
        return m
    unknown = False
    verdict: bool | None = False
    for x in G.simplices:
        r = is_contractible(G.minus(G.cofaces(x)), cache, budget)
        if r:
            verdict = True
            break
        if r is None:
            unknown = True
    if verdict is False and unknown:
        verdict = None
    cache_.put(key, verdict)
    return verdict


def sphere_formula_check(G: Complex, m: int = 1) -> bool:
    from .cohomology import sphere_formula_sum

    if m < 1:
        raise ValueError("m must be >= 1")
    return sphere_formula_sum(G, m) == 0


def boundary(G: Complex, q: int | None = None, cache: ClassificationCache | None = None) -> Complex:
    """Closure of the simplices whose unit sphere is not a DS (q-1)-sphere."""
    q = _q(G, q)
    bad = [x for x in G.simplices if not is_ds_sphere(unit_sphere(G, x), q - 1, cache)]
    return closure(bad)


def is_ds_ball(H: Complex, d: int, cache: ClassificationCache | None = None) -> bool:
    """Surrogate ball test: DS manifold with boundary, chi = 1, sphere boundary."""
    if not H.simplices or H.dim != d or euler_characteristic(H) != 1:
        return False
    if not is_ds_manifold_with_boundary(H, d, cache):
        return False
    return is_ds_sphere(boundary(H, d, cache), d - 1, cache)


def is_ds_manifold_with_boundary(G: Complex, q: int | None = None, cache: ClassificationCache | None = None) -> bool:
    """Every unit sphere is a DS (q-1)-sphere or a DS (q-1)-ball."""
    q = _q(G, q)
    if not G.simplices or G.dim != q:
        return False

    def compute() -> bool:
        for x in G.simplices:
            S = unit_sphere(G, x)
            if not (is_ds_sphere(S, q - 1, cache) or is_ds_ball(S, q - 1, cache)):
                return False
        return True

    return _memo("ds-manifold-with-boundary", G, q, cache, compute)


def facet_dimensions(G: Complex) -> list[int]:
    return sorted({len(x) - 1 for x in G.facets})


def stats(cache: ClassificationCache | None = None) -> dict:
    c = default_cache if cache is None else cache
    return {"entries": len(c), "hits": c.stats["hits"], "misses": c.stats["misses"]}
