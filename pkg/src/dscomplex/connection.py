"""Connection Laplacian and its Green function.

L[x][y] = 1 when simplices x and y share a vertex (their intersection is
then a face in G), else 0, indexed in canonical simplex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import Complex, Simplex, omega
from .linalg import det, integer_inverse, inverse_fraction

__all__ = [
    "UnimodularityReport",
    "connection_laplacian",
    "expected_determinant",
    "green_function",
    "green_star_check",
    "green_diagonal_check",
    "green_star_matrix",
    "stable_sphere_matrix",
    "unimodularity_check",
]


def connection_laplacian(G: Complex) -> list[list[int]]:
    n = len(G)
    idx = G.index
    vc = G._vertex_cofaces
    L = [[0] * n for _ in range(n)]
    for x in G.simplices:
        row = L[idx[x]]
        for v in x:
            for y in vc[v]:
                row[idx[y]] = 1
    return L


@dataclass(frozen=True)
class UnimodularityReport:
    det: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.det == self.expected

    def to_json(self) -> dict:
        return {"det": self.det, "expected": self.expected, "ok": self.ok}


def expected_determinant(G: Complex) -> int:
    """prod omega(x) = (-1)^(number of odd-dimensional simplices)."""
    odd = sum(1 for x in G.simplices if len(x) % 2 == 0)
    return -1 if odd % 2 else 1


def unimodularity_check(G: Complex) -> UnimodularityReport:
    return UnimodularityReport(det(connection_laplacian(G)), expected_determinant(G))


def green_function(G: Complex) -> list[list[int]] | list[list[Fraction]]:
    """L^{-1}: a certified integer inverse, or the rational inverse otherwise."""
    L = connection_laplacian(G)
    g = integer_inverse(L)
    if g is not None:
        return g
    return inverse_fraction(L)


def _star_chi(G: Complex) -> dict[Simplex, int]:
    return {x: sum(omega(y) for y in G.cofaces(x)) for x in G.simplices}


def green_star_matrix(G: Complex, inclusive: bool = True) -> list[list[int]]:
    """omega(x) omega(y) chi(W(x) n W(y)); W is U (inclusive) or the proper cofaces.

    Stars meet in the star of x u y when that simplex exists, else not at all.
    """
    n = len(G)
    S = G.simplices
    members = G._members
    chi = _star_chi(G)
    out = [[0] * n for _ in range(n)]
    for i, x in enumerate(S):
        for j, y in enumerate(S):
            u = tuple(sorted(set(x) | set(y)))
            if u not in members:
                continue
            c = chi[u]
            if not inclusive:
                # proper cofaces of both drop u itself when u equals x or y
                if u == x or u == y:
                    c -= omega(u)
            out[i][j] = omega(x) * omega(y) * c
    return out


def green_star_check(G: Complex) -> bool:
    g = green_function(G)
    return g == green_star_matrix(G, inclusive=True)


def stable_sphere_matrix(G: Complex) -> list[list[int]]:
    """chi(S^-(x) n S^-(y)): signed count of common proper faces."""
    S = G.simplices
    n = len(S)

    def faces(x):
        return {z for r in range(1, len(x)) for z in combinations(x, r)}

    F = [faces(x) for x in S]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            c = sum(omega(z) for z in F[i] & F[j])
            out[i][j] = out[j][i] = c
    return out


def green_diagonal_check(G: Complex) -> bool:
    from .core import euler_characteristic, unit_sphere

    g = green_function(G)
    return all(g[i][i] == 1 - euler_characteristic(unit_sphere(G, x)) for i, x in enumerate(G.simplices))
