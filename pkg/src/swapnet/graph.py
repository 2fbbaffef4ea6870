"""Simple undirected graphs and the distance primitives both games share.

Vertices are the integers ``0..n-1`` and never get renumbered, so a sequence
of swaps can always be replayed from the initial graph.  Unreachable pairs
and infinite costs are represented by sentinels that compare above every
finite value.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import InvalidSwap

__all__ = [
    "INFINITE",
    "UNREACHABLE",
    "Graph",
    "SwapMove",
    "all_pairs_distances",
    "apply_swap",
    "bfs_distances",
    "diameter",
    "ext_sub",
    "is_connected",
    "k_vicinity",
    "robust_degree",
    "robust_neighbors",
    "sum_of_distances",
]

#: Cost of a vertex that cannot reach everyone (float so it orders above any int).
INFINITE = math.inf

#: Entry of a :func:`all_pairs_distances` matrix for vertices in different components.
UNREACHABLE = int(np.iinfo(np.int64).max)


class SwapMove(NamedTuple):
    """``player`` drops its edge to ``removed`` and connects to ``added`` instead."""

    player: int
    removed: int
    added: int


class Graph:
    """Labeled simple undirected graph on vertices ``0..n-1``.

    Instances are treated as immutable snapshots; :func:`apply_swap` returns
    a new graph.  Equality and hashing are by ``(n, edge set)``.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self._n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in self._adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            self._adj[u].add(v)
            self._adj[v].add(u)

    @classmethod
    def _from_adjacency(cls, adj: list[set[int]]) -> Graph:
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = adj
        return g

    @property
    def n(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return sorted((u, v) for u in range(self._n) for v in self._adj[u] if u < v)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def iter_neighbors(self, v: int) -> Iterator[int]:
        return iter(self._adj[v])

    def non_neighbors(self, v: int) -> list[int]:
        """Vertices other than ``v`` that are not adjacent to it, ascending."""
        adj = self._adj[v]
        return [w for w in range(self._n) if w != v and w not in adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def copy(self) -> Graph:
        return Graph._from_adjacency([set(a) for a in self._adj])

    def adjacency(self) -> list[frozenset[int]]:
        return [frozenset(a) for a in self._adj]

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self._n))
        h.add_edges_from(self.edges())
        return h

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()!r})"

    # Single-owner mutation for hot loops (dynamics, swap evaluation).
    def _swap_inplace(self, player: int, removed: int, added: int) -> None:
        adj = self._adj
        adj[player].discard(removed)
        adj[removed].discard(player)
        adj[player].add(added)
        adj[added].add(player)


def check_swap(g: Graph, m: SwapMove) -> None:
    """Raise :class:`InvalidSwap` unless ``m`` is a legal move in ``g``."""
    p, r, a = m
    n = g.n
    if not (0 <= p < n and 0 <= r < n and 0 <= a < n):
        raise InvalidSwap(f"{m} has a vertex outside 0..{n - 1}")
    if not g.has_edge(p, r):
        raise InvalidSwap(f"{m}: {r} is not a neighbor of {p}")
    if a == p or g.has_edge(p, a):
        raise InvalidSwap(f"{m}: {a} is {p} itself or already adjacent to it")


def apply_swap(g: Graph, m: SwapMove) -> Graph:
    """Return the graph after ``m.player`` swaps ``m.removed`` for ``m.added``."""
    check_swap(g, m)
    h = g.copy()
    h._swap_inplace(*m)
    return h


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; ``-1`` marks unreachable vertices."""
    adj = g._adj
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """``n x n`` int64 matrix of hop distances, one BFS per source."""
    n = g.n
    out = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        row = np.asarray(bfs_distances(g, s), dtype=np.int64)
        out[s, row >= 0] = row[row >= 0]
    return out


def _cost_from_dist(dist: list[int]):
    total = 0
    for d in dist:
        if d < 0:
            return INFINITE
        total += d
    return total


def sum_of_distances(g: Graph, v: int):
    """Connection cost of ``v``: total distance to every vertex, or INFINITE."""
    return _cost_from_dist(bfs_distances(g, v))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_distances(g, 0)) >= 0


def diameter(g: Graph):
    """Largest distance between two vertices; INFINITE if ``g`` is disconnected."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            return INFINITE
        best = max(best, max(dist))
    return best


def k_vicinity(g: Graph, u: int, k: int) -> frozenset[int]:
    """Vertices within distance ``k`` of ``u`` (always includes ``u``)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    dist = bfs_distances(g, u)
    return frozenset(w for w, d in enumerate(dist) if 0 <= d <= k)


def robust_neighbors(g: Graph, v: int) -> frozenset[int]:
    """Neighbors of ``v`` whose own degree is at least 2."""
    return frozenset(u for u in g.iter_neighbors(v) if g.degree(u) >= 2)


def robust_degree(g: Graph, v: int) -> int:
    return len(robust_neighbors(g, v))


def ext_sub(a, b):
    """``a - b`` on costs that may be INFINITE; ``INFINITE - INFINITE`` is 0."""
    if a == INFINITE and b == INFINITE:
        return 0
    return a - b
