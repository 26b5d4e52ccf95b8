"""Maximal-clique enumeration on small undirected graphs.

Bron-Kerbosch with pivoting: at each recursion step a pivot vertex u is
chosen from P | X to maximize |P & N(u)|, and only candidates outside N(u)
are branched on.  Vertex sets are represented as integer bitmasks, which is
plenty for the graphs this package builds (at most one vertex per matrix
column).
"""

from __future__ import annotations

from typing import Iterable, Sequence


class UndirectedGraph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.adj = [0] * n
        for a, b in edges:
            self.add_edge(a, b)

    def add_edge(self, a: int, b: int) -> None:
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise IndexError(f"edge ({a},{b}) out of range for {self.n} vertices")
        if a == b:
            raise ValueError("self-loops are not allowed")
        self.adj[a] |= 1 << b
        self.adj[b] |= 1 << a

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(graph: UndirectedGraph) -> list[tuple[int, ...]]:
    """All maximal cliques, each exactly once, sorted by their vertex tuples.

    Isolated vertices come out as singleton cliques.
    """
    adj = graph.adj
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(_bits(r)))
            return
        # pivot: vertex of P|X with the most neighbours inside P
        best_u, best_cnt = -1, -1
        for u in _bits(p | x):
            cnt = (p & adj[u]).bit_count()
            if cnt > best_cnt:
                best_u, best_cnt = u, cnt
        for v in _bits(p & ~adj[best_u]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p ^= bit
            x |= bit

    if graph.n:
        expand(0, (1 << graph.n) - 1, 0)
    return sorted(out)
