"""Bit-vector graphs and exhaustive enumeration of cliques of a fixed size.

The search is depth-first branch and bound in the style of Tomita's MCQ:
candidates are greedily colored, and a vertex is only branched on when its
color number (an upper bound on any clique among it and the candidates
before it) still reaches the number of vertices missing. With
``jobs > 1`` the root-level branches are farmed out to a process pool;
results are merged and sorted, so output never depends on ``jobs``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .errors import ParameterError

Clique = tuple[int, ...]


@dataclass(frozen=True)
class BitGraph:
    """Simple undirected graph; bit j of ``adj[i]`` is set iff i ~ j."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ParameterError(f"self-loop at vertex {i}")
            if row & ~full:
                raise ParameterError(f"vertex {i} has neighbours out of range")
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ParameterError(f"asymmetric adjacency between {i} and {j}")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "BitGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "BitGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def is_clique(self, vertices: Sequence[int]) -> bool:
        return all(self.adj[u] >> v & 1 for u, v in itertools.combinations(vertices, 2))

    def to_dimacs(self, comment: str = "") -> str:
        """DIMACS edge format (1-based), as read by Cliquer and similar tools."""
        lines = [f"c {c}" for c in comment.splitlines()]
        lines.append(f"p edge {self.n} {self.num_edges()}")
        lines += [f"e {u + 1} {v + 1}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def graph_from_relation(items: Sequence[Any], relation: Callable[[Any, Any], bool]) -> BitGraph:
    """Vertex i ~ j iff ``relation(items[i], items[j])``; relation must be symmetric."""
    n = len(items)
    adj = [0] * n
    for i, j in itertools.combinations(range(n), 2):
        if relation(items[i], items[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return BitGraph(n, tuple(adj))


def _color_sort(cand: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; vertices listed by nondecreasing color."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    while cand:
        color += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            cand ^= low
            q ^= low
            q &= ~adj[v]
    return order, colors


def _expand(adj: Sequence[int], clique: list[int], cand: int, need: int, sink: Callable[[list[int]], None]) -> None:
    order, colors = _color_sort(cand, adj)
    for i in range(len(order) - 1, -1, -1):
        if colors[i] < need:
            return
        v = order[i]
        cand ^= 1 << v
        clique.append(v)
        if need == 1:
            sink(clique)
        else:
            _expand(adj, clique, cand & adj[v], need - 1, sink)
        clique.pop()


def _root_tasks(graph: BitGraph, size: int) -> list[tuple[int, int]]:
    """(vertex, candidates) for every root branch that survives the color bound."""
    order, colors = _color_sort((1 << graph.n) - 1, graph.adj)
    tasks = []
    cand = (1 << graph.n) - 1
    for i in range(len(order) - 1, -1, -1):
        if colors[i] < size:
            break
        v = order[i]
        cand ^= 1 << v
        tasks.append((v, cand & graph.adj[v]))
    return tasks


def _run_task(args: tuple[tuple[int, ...], int, int, int, bool]) -> list[Clique] | int:
    adj, v, cand, size, count_only = args
    if count_only:
        total = 0

        def count(_: list[int]) -> None:
            nonlocal total
            total += 1

        _expand(adj, [v], cand, size - 1, count)
        return total
    found: list[Clique] = []

    def collect(c: list[int]) -> None:
        found.append(tuple(sorted(c)))

    _expand(adj, [v], cand, size - 1, collect)
    return found


def _search(graph: BitGraph, size: int, jobs: int, count_only: bool) -> list[list[Clique] | int]:
    if size < 1:
        raise ParameterError(f"clique size must be at least 1, got {size}")
    if size > graph.n:
        return []
    if size == 1:
        return [1] * graph.n if count_only else [[(v,)] for v in range(graph.n)]
    tasks = [(graph.adj, v, cand, size, count_only) for v, cand in _root_tasks(graph, size)]
    if jobs <= 1 or len(tasks) < 2:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks, chunksize=1))


def enumerate_cliques(graph: BitGraph, size: int, jobs: int = 1) -> list[Clique]:
    """All cliques with exactly ``size`` vertices, each a sorted tuple, in sorted order."""
    parts = _search(graph, size, jobs, count_only=False)
    out = sorted(c for part in parts for c in part)  # type: ignore[union-attr]
    for c in out:
        if not graph.is_clique(c):
            raise AssertionError(f"search emitted a non-clique {c}")
    return out


def count_cliques(graph: BitGraph, size: int, jobs: int = 1) -> int:
    """Number of cliques with exactly ``size`` vertices."""
    return sum(_search(graph, size, jobs, count_only=True))  # type: ignore[arg-type]
