"""Dual graphs, chromatic numbers, vertex arboricity and Hamiltonicity.

The searches are exact but budgeted: each counts visited nodes and
reports an explicit unknown when the budget is spent.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .core import Complex, skeleton_graph
from .graph import Graph

__all__ = [
    "ChromaticResult",
    "chromatic_bound_check",
    "chromatic_number",
    "dual_graph",
    "dual_regularity_check",
    "forest_coloring",
    "hamiltonicity_check",
    "is_proper_coloring",
    "two_forest_partition",
    "vertex_arboricity_two_check",
]

DEFAULT_BUDGET = 200000


def dual_graph(G: Complex) -> Graph:
    """Top-dimensional simplices, joined when they share a codimension-one face."""
    q = G.dim
    tops = [x for x in G.simplices if len(x) == q + 1]
    pos = {x: i for i, x in enumerate(tops)}
    walls: dict[tuple, list[int]] = defaultdict(list)
    for x in tops:
        for i in range(len(x)):
            walls[x[:i] + x[i + 1 :]].append(pos[x])
    edges = [(a, b) for ids in walls.values() for i, a in enumerate(ids) for b in ids[i + 1 :]]
    return Graph(len(tops), edges, labels=tops)


@dataclass(frozen=True)
class RegularityReport:
    precondition: bool
    regular_degree: int
    degrees: tuple[int, ...]
    triangle_free: bool

    @property
    def ok(self) -> bool:
        return self.precondition and set(self.degrees) <= {self.regular_degree} and self.triangle_free

    def to_json(self) -> dict:
        return {
            "precondition": self.precondition,
            "expected_degree": self.regular_degree,
            "degrees": sorted(set(self.degrees)),
            "triangle_free": self.triangle_free,
            "ok": self.ok,
        }


def dual_regularity_check(G: Complex) -> RegularityReport:
    from .classify import is_ds_manifold

    d = dual_graph(G)
    return RegularityReport(is_ds_manifold(G), G.dim + 1, tuple(d.degrees), d.is_triangle_free())


def is_proper_coloring(g: Graph, colors) -> bool:
    return all(colors[a] != colors[b] for a, b in g.edges)


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    adj = g.adjacency
    color = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0), key=lambda u: (len(seen[u]), len(adj[u]), -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in adj[v]:
            seen[w].add(c)
    return color


@dataclass(frozen=True)
class ChromaticResult:
    value: int | None
    lower: int
    upper: int
    coloring: tuple[int, ...]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {"value": self.value, "lower": self.lower, "upper": self.upper, "exact": self.exact, "nodes": self.nodes}


def _clique_lower_bound(g: Graph) -> int:
    from .build import maximal_cliques

    if g.n == 0:
        return 0
    return max(len(c) for c in maximal_cliques(g))


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """DSATUR branch and bound; the clique number is the starting lower bound."""
    n = g.n
    if n == 0:
        return ChromaticResult(0, 0, 0, (), 0)
    best = _dsatur_greedy(g)
    upper = max(best) + 1
    lower = _clique_lower_bound(g)
    if lower == upper:
        return ChromaticResult(upper, lower, upper, tuple(best), 0)
    adj = g.adjacency
    nodes = 0
    exhausted = False

    def try_colors(k: int) -> list[int] | None:
        """Search for a proper coloring with k colors."""
        color = [-1] * n
        sat = [[0] * k for _ in range(n)]

        def rec(done: int) -> bool:
            nonlocal nodes, exhausted
            if done == n:
                return True
            nodes += 1
            if nodes > budget:
                exhausted = True
                return False
            v = -1
            key = (-1, -1)
            for u in range(n):
                if color[u] < 0:
                    s = sum(1 for c in range(k) if sat[u][c])
                    kk = (s, len(adj[u]))
                    if kk > key:
                        key, v = kk, u
            used = max(color) + 1
            # symmetry: only one fresh color is ever tried
            for c in range(min(k, used + 1)):
                if sat[v][c]:
                    continue
                color[v] = c
                for w in adj[v]:
                    sat[w][c] += 1
                if rec(done + 1):
                    return True
                for w in adj[v]:
                    sat[w][c] -= 1
                color[v] = -1
                if exhausted:
                    return False
            return False

        return color if rec(0) else None

    while upper > lower:
        c = try_colors(upper - 1)
        if exhausted:
            return ChromaticResult(None, lower, upper, tuple(best), nodes)
        if c is None:
            lower = upper
            break
        best, upper = c, upper - 1
    return ChromaticResult(upper, upper, upper, tuple(best), nodes)


class _RollbackDSU:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.log: list[tuple[int, int]] = []

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.log.append((a, b))

    def undo(self, to: int) -> None:
        while len(self.log) > to:
            a, b = self.log.pop()
            self.parent[b] = b
            self.size[a] -= self.size[b]


def two_forest_partition(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[list[int] | None, bool]:
    """Split vertices into two classes inducing forests.

    Returns (labels, exhausted).  Vertices are placed in BFS order; a vertex
    may join a class only if its neighbors there lie in distinct trees.
    """
    n = g.n
    adj = g.adjacency
    order: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        for v in queue:
            order.append(v)
            for w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    side = [-1] * n
    dsu = [_RollbackDSU(n), _RollbackDSU(n)]
    nodes = 0

    def rec(i: int) -> bool | None:
        nonlocal nodes
        if i == n:
            return True
        nodes += 1
        if nodes > budget:
            return None
        v = order[i]
        for c in (0, 1):
            d = dsu[c]
            roots = [d.find(w) for w in adj[v] if side[w] == c]
            if len(roots) != len(set(roots)):
                continue
            mark = len(d.log)
            side[v] = c
            for w in adj[v]:
                if side[w] == c:
                    d.union(v, w)
            r = rec(i + 1)
            if r is None:
                return None
            if r:
                return True
            d.undo(mark)
            side[v] = -1
            if i == 0:
                # class symmetry: the first vertex may be fixed
                break
        return False

    r = rec(0)
    if r is None:
        return None, True
    return (side if r else None), False


def vertex_arboricity_two_check(g: Graph, budget: int = DEFAULT_BUDGET) -> bool | None:
    parts, exhausted = two_forest_partition(g, budget)
    if exhausted:
        return None
    return parts is not None


def forest_coloring(G: Complex, parts: list[int]) -> dict[int, int] | None:
    """Vertex coloring with 2(q+1) colors from a 2-forest split of the dual.

    Within each class the facets form a forest of simplices glued along
    walls; walking each tree gives its vertices one of q+1 colors, a vertex
    keeping the palette of the first class that reaches it.  Returns the
    coloring if it is consistent and proper, else None.
    """
    D = dual_graph(G)
    q = G.dim
    facets = D.labels
    col: dict[int, int] = {}
    for cls in (0, 1):
        local: dict[int, int] = {}
        members = [i for i in range(D.n) if parts[i] == cls]
        inside = set(members)
        visited: set[int] = set()
        def place(x) -> bool:
            known = {local[v] for v in x if v in local}
            free = [c for c in range(q + 1) if c not in known]
            for v in x:
                if v not in local:
                    if not free:
                        return False
                    local[v] = free.pop(0)
            return len({local[v] for v in x}) == len(x)

        for root in members:
            if root in visited:
                continue
            visited.add(root)
            if not place(facets[root]):
                return None
            stack = [root]
            while stack:
                a = stack.pop()
                for b in sorted(D.adjacency[a]):
                    if b not in inside or b in visited:
                        continue
                    visited.add(b)
                    if not place(facets[b]):
                        return None
                    stack.append(b)
        for v, c in local.items():
            col.setdefault(v, cls * (q + 1) + c)
    for v in G.vertices:
        col.setdefault(v, 0)
    sk = skeleton_graph(G)
    colors = [col[v] for v in sk.labels]
    return col if is_proper_coloring(sk, colors) else None


@dataclass(frozen=True)
class ChromaticBoundReport:
    q: int
    precondition: bool
    chromatic: ChromaticResult
    forest_partition: bool | None
    forest_colors: int | None

    @property
    def ok(self) -> bool:
        return self.precondition and self.chromatic.upper <= 2 * self.q + 2

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "bound": 2 * self.q + 2,
            "precondition": self.precondition,
            "chromatic": self.chromatic.to_json(),
            "dual_two_forests": self.forest_partition,
            "forest_coloring_colors": self.forest_colors,
            "ok": self.ok,
        }


def chromatic_bound_check(G: Complex, budget: int = DEFAULT_BUDGET) -> ChromaticBoundReport:
    from .classify import is_ds_manifold

    q = G.dim
    pre = is_ds_manifold(G, q)
    chrom = chromatic_number(skeleton_graph(G), budget)
    parts, exhausted = two_forest_partition(dual_graph(G), budget)
    fp = None if exhausted else parts is not None
    ncol = None
    if parts is not None:
        col = forest_coloring(G, parts)
        if col is not None:
            ncol = len(set(col.values()))
    return ChromaticBoundReport(q, pre, chrom, fp, ncol)


def _tough_obstruction(g: Graph) -> bool:
    """Some S with more than |S| components of g - S rules out a Hamiltonian cycle.

    Candidates are the prefixes of the vertices sorted by decreasing degree.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for s in range(1, g.n // 2 + 1):
        rest = order[s:]
        if len(g.induced(rest).components()) > s:
            return True
    return False


def hamiltonicity_check(g: Graph, budget: int = DEFAULT_BUDGET) -> bool | None:
    n = g.n
    if n < 3:
        return False
    if min(g.degrees) < 2 or len(g.components()) > 1:
        return False
    if _tough_obstruction(g):
        return False
    adj = [sorted(s) for s in g.adjacency]
    adjs = g.adjacency
    path = [0]
    on = [False] * n
    on[0] = True
    nodes = 0

    def reachable_ok() -> bool:
        # remaining vertices stay connected to the path end
        end = path[-1]
        left = [v for v in range(n) if not on[v]]
        if not left:
            return True
        seen = {end}
        stack = [end]
        while stack:
            v = stack.pop()
            for w in adjs[v]:
                if not on[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return all(v in seen for v in left) and any(0 in adjs[v] for v in left)

    def rec() -> bool | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        if len(path) == n:
            return 0 in adjs[path[-1]]
        if not reachable_ok():
            return False
        end = path[-1]
        cand = [w for w in adj[end] if not on[w]]
        cand.sort(key=lambda w: sum(1 for u in adjs[w] if not on[u]))
        for w in cand:
            path.append(w)
            on[w] = True
            r = rec()
            if r is None or r:
                return r
            on[w] = False
            path.pop()
        return False

    return rec()
