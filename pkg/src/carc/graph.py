"""Simple undirected graphs on vertices 0..n-1."""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence


class Graph:
    """Undirected simple graph with frozen adjacency sets."""

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency sets, got {len(adj)}")
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        for v, nbrs in enumerate(self.adj):
            for w in nbrs:
                if not 0 <= w < n:
                    raise ValueError(f"vertex {v} has out-of-range neighbor {w}")
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric edge {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks, used by the search routines."""
        out = []
        for nbrs in self.adj:
            m = 0
            for w in nbrs:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `vertices`, renumbered in increasing order.

        Returns the subgraph and the map from new ids to old ids.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        adj = [[index[w] for w in self.adj[v] if w in index] for v in keep]
        return Graph(len(keep), adj), keep

    def complement(self) -> "Graph":
        everyone = set(range(self.n))
        return Graph(self.n, [everyone - self.adj[v] - {v} for v in range(self.n)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges():
            adj[perm[u]].add(perm[v])
            adj[perm[v]].add(perm[u])
        return Graph(self.n, adj)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp, queue = [], deque([root])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)

    def twin_classes(self) -> list[list[int]]:
        """Maximal families of vertices with equal closed neighborhoods."""
        groups: dict[frozenset[int], list[int]] = {}
        for v in range(self.n):
            groups.setdefault(self.closed(v), []).append(v)
        return sorted(groups.values())

    def is_cycle(self) -> bool:
        """True iff the graph is a single chordless cycle on all vertices."""
        return self.n >= 3 and all(len(a) == 2 for a in self.adj) and self.is_connected()
