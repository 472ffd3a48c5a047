"""Immutable simple graphs on at most 64 vertices, with bitset adjacency.

Vertices are the integers 0..n-1 and each adjacency row is a Python int
used as a bitset.  Exceeding the width cap is a clean error, never silent
truncation; every desk-scale computation in this toolkit fits in 64
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Finite simple graph: vertex count plus one neighbor bitset per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside supported range 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits beyond vertex range")
            if (row >> v) & 1:
                raise ValueError(f"vertex {v} is self-adjacent")
        for v, row in enumerate(self.adj):
            rest = row
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; loops and out-of-range vertices rejected."""
    if n < 0 or n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete(n: int) -> Graph:
    """K_n: every distinct pair adjacent."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds width cap {MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    """C_n on vertices 0..n-1 with edges {i, i+1 mod n}; requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets.

    Vertices of g1 keep their indices; vertices of g2 are shifted by g1.n.
    The clique number of the result is the sum of the operands' clique
    numbers.
    """
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ValueError(f"join on {n} vertices exceeds width cap {MAX_VERTICES}")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << n) - 1) & ~mask1
    adj = [g1.adj[v] | mask2 for v in range(g1.n)]
    adj += [(g2.adj[v] << g1.n) | mask1 for v in range(g2.n)]
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    """Same vertices, exactly the non-edges of g."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def _mask_has_clique(adj: tuple[int, ...], mask: int, k: int) -> bool:
    """True iff the vertices in `mask` contain a k-clique."""
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    while mask:
        if mask.bit_count() < k:
            return False
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        if _mask_has_clique(adj, mask & adj[v], k - 1):
            return True
    return False


def has_clique(g: Graph, subset: Iterable[int], k: int) -> bool:
    """True iff the induced subgraph on `subset` contains a k-clique.

    k = 0 is vacuously true; k = 1 asks whether the subset is nonempty.
    """
    if k < 0:
        raise ValueError("clique size must be nonnegative")
    mask = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    return _mask_has_clique(g.adj, mask, k)


def max_clique(g: Graph) -> list[int]:
    """One maximum clique, found by branch and bound with a greedy coloring bound."""
    if g.n == 0:
        return []
    adj = g.adj
    best_mask = 1 << (max(range(g.n), key=g.degree))
    best_size = 1

    def expand(cand: int, cur_mask: int, cur_size: int):
        nonlocal best_mask, best_size
        # Greedy-color the candidate set; a vertex of color c can extend the
        # clique by at most c more vertices.
        seq: list[int] = []
        col: list[int] = []
        rest = cand
        c = 0
        while rest:
            c += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                seq.append(v)
                col.append(c)
                avail &= avail - 1
                avail &= ~adj[v]
                rest &= ~(1 << v)
        for i in range(len(seq) - 1, -1, -1):
            if cur_size + col[i] <= best_size:
                return
            v = seq[i]
            new_mask = cur_mask | (1 << v)
            if cur_size + 1 > best_size:
                best_size = cur_size + 1
                best_mask = new_mask
            sub = cand & adj[v]
            if sub:
                expand(sub, new_mask, cur_size + 1)
            cand &= ~(1 << v)

    expand((1 << g.n) - 1, 0, 0)
    out = []
    rest = best_mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        out.append(v)
    return out


def clique_number(g: Graph) -> int:
    """Exact maximum clique size; 0 for the empty graph."""
    if g.n == 0:
        return 0
    return len(max_clique(g))
