"""Seeded random complexes and the universal-law runner."""

from __future__ import annotations

import random
import time
from collections.abc import Callable

from .build import whitney_complex
from .classify import is_ds_manifold, is_ds_sphere, is_ds_variety, sphere_formula_check
from .cohomology import (
    betti_vector,
    exterior_derivative,
    green_energy_check,
    local_boundary_check,
    quadratic_complex,
    star_lemma_check,
    wu_characteristic,
)
from .connection import unimodularity_check
from .core import Complex, closure, euler_characteristic
from .graph import Graph
from .levelsets import level_complex, random_vertex_function
from .library import cross_polytope, example
from .valuations import functional_gauss_bonnet_check, x_valuation, y_valuation

__all__ = [
    "LAWS",
    "SHIPPED",
    "all_pass",
    "check_laws",
    "complex_report",
    "corpus_runner",
    "failures",
    "random_complex",
    "random_facet_complex",
    "random_level_complex",
    "random_whitney_complex",
]

SHIPPED = (
    "point",
    "simplex:3",
    "boundary:4",
    "cycle:5",
    "star-graph:4",
    "octahedron",
    "icosahedron",
    "rp2",
    "torus",
    "cross:3",
    "c4-join-c4",
    "rp2+rp2",
    "suspension-rp2+rp2",
)


def random_facet_complex(rng: random.Random, max_simplices: int = 40) -> Complex:
    while True:
        n = rng.randint(2, 7)
        facets = []
        for _ in range(rng.randint(1, 5)):
            size = rng.randint(1, min(4, n))
            facets.append(rng.sample(range(n), size))
        G = closure(facets)
        if len(G) <= max_simplices:
            return G


def random_whitney_complex(rng: random.Random, max_simplices: int = 40) -> Complex:
    while True:
        n = rng.randint(2, 8)
        p = rng.uniform(0.2, 0.7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        G = whitney_complex(Graph(n, edges))
        if len(G) <= max_simplices:
            return G


def random_level_complex(rng: random.Random, max_simplices: int = 40) -> Complex:
    while True:
        S = cross_polytope(rng.choice((1, 2)))
        G = level_complex(S, random_vertex_function(S, 1, rng))
        if G.simplices and len(G) <= max_simplices:
            return G


GENERATORS: dict[str, Callable[[random.Random, int], Complex]] = {
    "facets": random_facet_complex,
    "whitney": random_whitney_complex,
    "level": random_level_complex,
}


def random_complex(rng: random.Random, max_simplices: int = 40) -> tuple[str, Complex]:
    kind = rng.choice(sorted(GENERATORS))
    return kind, GENERATORS[kind](rng, max_simplices)


def _every_x(G: Complex, fn) -> bool:
    return all(fn(x) for x in G.simplices)


LAWS: dict[str, Callable[[Complex], bool]] = {
    "sphere_formula": lambda G: sphere_formula_check(G, 1),
    "functional_gauss_bonnet": functional_gauss_bonnet_check,
    "star_lemma": lambda G: _every_x(G, lambda x: all(star_lemma_check(G, x, m) for m in (1, 2, 3))),
    "local_boundary": lambda G: _every_x(G, lambda x: all(local_boundary_check(G, x, m) for m in (1, 2, 3))),
    "green_k1": lambda G: all(green_energy_check(G, m, 1) for m in (1, 2, 3)),
    "d_squared": lambda G: exterior_derivative(G).square_is_zero(),
    "quadratic_d_squared": lambda G: quadratic_complex(G).derivative.square_is_zero(),
    "unimodularity": lambda G: unimodularity_check(G).ok,
}


def check_laws(G: Complex, timings: dict | None = None) -> dict[str, bool]:
    out = {}
    for name, fn in LAWS.items():
        t0 = time.perf_counter()
        out[name] = bool(fn(G))
        if timings is not None:
            timings[name] = round(time.perf_counter() - t0, 6)
    return out


def complex_report(G: Complex, ident: str, timings: bool = False) -> dict:
    """Invariants, verdicts and law checks of one complex."""
    q = G.dim
    clock: dict | None = {} if timings else None
    report = {
        "id": ident,
        "f": list(G.f_vector),
        "euler": euler_characteristic(G),
        "verdicts": {
            "ds_sphere": is_ds_sphere(G, q),
            "ds_manifold": is_ds_manifold(G, q),
            "ds_variety": is_ds_variety(G, q),
        },
        "valuations": {
            "X": {str(k): x_valuation(k, q)(G.f_vector) for k in range(q) if (k + q) % 2},
            "Y": {str(k): y_valuation(k, q)(G.f_vector) for k in range(q + 1)},
        },
        "betti": list(betti_vector(G)) if G.simplices else [],
        "wu": {str(m): wu_characteristic(G, m) for m in (1, 2, 3)},
        "laws": check_laws(G, clock),
    }
    if timings:
        report["timings"] = clock
    return report


def corpus_runner(
    seed: int, n: int, max_simplices: int = 40, shipped: bool = False, timings: bool = False
) -> list[dict]:
    """Reports for n seeded random complexes, optionally preceded by the shipped examples."""
    reports = []
    if shipped:
        for name in SHIPPED:
            reports.append({**complex_report(example(name), name, timings), "kind": "shipped"})
    rng = random.Random(seed)
    for i in range(n):
        kind, G = random_complex(rng, max_simplices)
        r = complex_report(G, f"random-{seed}-{i}", timings)
        r.update(kind=kind, seed=seed, facets=[list(x) for x in G.facets])
        reports.append(r)
    return reports


def failures(reports: list[dict]) -> list[tuple[str, str]]:
    """(report id, law) for every violated law."""
    return [(r["id"], k) for r in reports for k, v in r["laws"].items() if not v]


def all_pass(reports: list[dict]) -> bool:
    return all(all(r["laws"].values()) for r in reports)
