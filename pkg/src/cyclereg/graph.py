"""Minimal immutable undirected simple-graph substrate.

Vertices are dense integer ids 0..n-1.  Family names (u3, w7, binary
strings, ...) and edge roles (outer/spoke/inner, cube dimension labels)
are optional side tables, never keys.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

#: Distance sentinel for unreachable vertices.
UNREACHABLE = math.inf

Edge = tuple[int, int]
Role = int | str


class GraphError(ValueError):
    """Base class for graph construction errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Undirected simple graph with optional vertex names and edge roles.

    Immutable after construction; adjacency lists are kept sorted so edge
    lookup is O(log deg) and equal graphs have identical representations.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    edge_roles: Mapping[Edge, Role] | None = field(default=None, compare=False)
    vertex_names: Mapping[int, str] | None = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def name_of(self, v: int) -> str:
        if self.vertex_names is not None and v in self.vertex_names:
            return self.vertex_names[v]
        return str(v)


def build_graph(
    n: int,
    edges: Sequence[tuple[int, int]],
    edge_roles: Mapping[Edge, Role] | None = None,
    vertex_names: Mapping[int, str] | None = None,
) -> LabeledGraph:
    """Build a simple graph, rejecting self-loops, duplicates and bad ids."""
    if n < 0:
        raise VertexOutOfRangeError("vertex count must be nonnegative")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[Edge] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        adj[u].append(v)
        adj[v].append(u)
    return LabeledGraph(
        n=n,
        adj=tuple(tuple(sorted(nbrs)) for nbrs in adj),
        edge_roles=dict(edge_roles) if edge_roles is not None else None,
        vertex_names=dict(vertex_names) if vertex_names is not None else None,
    )


def is_regular(g: LabeledGraph, k: int) -> bool:
    """True iff every vertex has degree k (vacuously true when empty)."""
    return all(len(nbrs) == k for nbrs in g.adj)


def connected_components(g: LabeledGraph) -> list[list[int]]:
    """Partition of the vertex set into maximal connected sets.

    Components are listed by smallest member, each sorted ascending.
    """
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def bfs_distances(
    g: LabeledGraph, source: int, radius: int | None = None
) -> list[int | float]:
    """BFS distances from `source`; unreachable vertices get UNREACHABLE.

    With `radius`, the search stops at that depth (vertices beyond it are
    reported unreachable), which keeps local queries on huge graphs cheap.
    """
    if not 0 <= source < g.n:
        raise VertexOutOfRangeError(f"source {source} outside 0..{g.n - 1}")
    dist: list[int | float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        if radius is not None and d > radius:
            continue
        for v in g.adj[u]:
            if dist[v] is UNREACHABLE:
                dist[v] = d
                queue.append(v)
    return dist


def is_bipartite(g: LabeledGraph) -> bool:
    """True iff the graph admits a proper 2-coloring."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def induced_subgraph(
    g: LabeledGraph, vertices: Sequence[int]
) -> tuple[LabeledGraph, list[int]]:
    """Induced subgraph on `vertices` plus the new-id -> old-id table."""
    old_ids = sorted(set(vertices))
    remap = {old: new for new, old in enumerate(old_ids)}
    edges = []
    roles: dict[Edge, Role] = {}
    names: dict[int, str] = {}
    for old_u in old_ids:
        for old_v in g.adj[old_u]:
            if old_u < old_v and old_v in remap:
                e = (remap[old_u], remap[old_v])
                edges.append(e)
                if g.edge_roles is not None:
                    role = g.edge_roles.get((old_u, old_v))
                    if role is not None:
                        roles[e] = role
    if g.vertex_names is not None:
        for old in old_ids:
            if old in g.vertex_names:
                names[remap[old]] = g.vertex_names[old]
    sub = build_graph(
        len(old_ids),
        edges,
        edge_roles=roles if roles else None,
        vertex_names=names if names else None,
    )
    return sub, old_ids


def ball(
    g: LabeledGraph, center_edge: Edge, radius: int
) -> tuple[LabeledGraph, list[int]]:
    """Induced subgraph on all vertices within `radius` of either endpoint.

    In a cubic graph a radius-4 ball has order at most 62, which is what
    makes per-edge 8-cycle counts constant-time.
    """
    u, v = center_edge
    if not g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge")
    du = bfs_distances(g, u, radius=radius)
    dv = bfs_distances(g, v, radius=radius)
    keep = [x for x in range(g.n) if du[x] <= radius or dv[x] <= radius]
    return induced_subgraph(g, keep)
