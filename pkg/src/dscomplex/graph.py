"""Finite simple graphs on vertices 0..n-1."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True, init=False)
class Graph:
    """Simple undirected graph.

    ``edges`` are sorted pairs ``(i, j)`` with ``i < j``; ``labels``
    optionally records where each vertex came from (e.g. original vertex ids
    or simplices) and never affects equality of the edge structure.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple | None = field(default=None, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence | None = None):
        clean = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {(a, b)} outside 0..{n - 1}")
            clean.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(clean)))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def induced(self, vertices: Iterable[int]) -> Graph:
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        labels = [self.labels[v] for v in vs] if self.labels is not None else vs
        return Graph(len(vs), edges, labels)

    def is_triangle_free(self) -> bool:
        adj = self.adjacency
        return all(not (adj[a] & adj[b]) for a, b in self.edges)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite_graph(*sizes: int) -> Graph:
    part = [p for p, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]])


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test (VF2 via networkx) after cheap invariants."""
    if g.n != h.n or len(g.edges) != len(h.edges) or sorted(g.degrees) != sorted(h.degrees):
        return False
    import networkx as nx

    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
