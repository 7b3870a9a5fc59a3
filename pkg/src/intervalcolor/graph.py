"""Immutable simple-graph core: degrees, distances, diameter, bipartiteness.

Vertices are labeled 1..vertex_count. Edges are unordered pairs, stored
normalized (smaller endpoint first) and sorted. Only connected graphs
without loops or parallel edges are representable; the constructor rejects
anything else instead of repairing it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the endpoint pair ordered smaller id first."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A connected simple undirected graph on vertices 1..vertex_count.

    Immutable after construction and safe to share between concurrent
    readers. Equality compares the vertex count and the canonical edge
    list, so two graphs built from the same edges in any order are equal.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]]):
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise ValueError(f"vertex count must be a positive integer, got {vertex_count!r}")
        normalized: list[Edge] = []
        for item in edges:
            pair = tuple(item)
            if len(pair) != 2:
                raise ValueError(f"edge {item!r} is not a pair of vertex ids")
            u, v = pair
            if not isinstance(u, int) or not isinstance(v, int):
                raise ValueError(f"edge {item!r} has non-integer endpoints")
            for x in (u, v):
                if not 1 <= x <= vertex_count:
                    raise ValueError(f"vertex {x} is outside 1..{vertex_count}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            normalized.append(normalize_edge(u, v))
        if len(set(normalized)) != len(normalized):
            seen: set[Edge] = set()
            for e in normalized:
                if e in seen:
                    raise ValueError(f"duplicate edge {e}")
                seen.add(e)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if self._bfs_levels(1).count(-1) > 1:  # index 0 is a filler
            raise ValueError("graph is not connected")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency lists, 1-indexed; entry 0 is an unused filler."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        """Number of edges incident to v."""
        self._check_vertex(v)
        return len(self._neighbors[v])

    def max_degree(self) -> int:
        """Largest vertex degree."""
        return max(len(self._neighbors[v]) for v in range(1, self.vertex_count + 1))

    def is_regular(self) -> bool:
        """True iff every vertex has the same degree."""
        degs = {len(self._neighbors[v]) for v in range(1, self.vertex_count + 1)}
        return len(degs) == 1

    def distance(self, u: int, v: int) -> int:
        """Length of a shortest path between u and v (0 iff u == v)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        levels = self._bfs_levels(u, stop_at=v)
        return levels[v]

    def diameter(self) -> int:
        """Largest distance over all vertex pairs."""
        best = 0
        for v in range(1, self.vertex_count + 1):
            best = max(best, max(self._bfs_levels(v)[1:]))
        return best

    def is_bipartite(self) -> bool:
        """True iff the vertices split into two sides with all edges across,
        equivalently iff the graph has no odd cycle."""
        side = [-1] * (self.vertex_count + 1)
        side[1] = 0
        queue = deque([1])
        while queue:
            u = queue.popleft()
            for w in self._neighbors[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
        return True

    def _bfs_levels(self, source: int, stop_at: int | None = None) -> list[int]:
        """BFS distances from source; unreached vertices stay -1."""
        levels = [-1] * (self.vertex_count + 1)
        levels[source] = 0
        queue = deque([source])
        neighbors = self._neighbors
        while queue:
            u = queue.popleft()
            for w in neighbors[u]:
                if levels[w] == -1:
                    levels[w] = levels[u] + 1
                    if w == stop_at:
                        return levels
                    queue.append(w)
        return levels

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v!r} is not in 1..{self.vertex_count}")

    def to_json_dict(self) -> dict:
        """Plain-JSON form: {"vertices": n, "edges": [[u, v], ...]}."""
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "Graph":
        """Parse the JSON graph format; unknown keys are ignored."""
        if not isinstance(doc, dict):
            raise ValueError("graph JSON must be an object")
        if "vertices" not in doc or "edges" not in doc:
            raise ValueError('graph JSON needs "vertices" and "edges" fields')
        vertices = doc["vertices"]
        edges = doc["edges"]
        if not isinstance(vertices, int):
            raise ValueError('graph JSON "vertices" must be an integer')
        if not isinstance(edges, list):
            raise ValueError('graph JSON "edges" must be an array of pairs')
        return cls(vertices, edges)
