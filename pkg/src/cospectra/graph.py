"""Simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Loopless, simple, undirected graph.

    ``edges`` holds each edge once as an ordered pair ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        out = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n = {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(out))

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degrees(self) -> list:
        return [len(a) for a in self.adjacency]

    def complement(self) -> "Graph":
        n = self.n
        return Graph.from_edges(
            n, ((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in self.edges)
        )

    def sorted_edges(self) -> list:
        return sorted(self.edges)
