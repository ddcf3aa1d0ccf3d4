"""Brute-force cycle-counting oracle and the [l,lambda,m]-regularity scanner.

The oracle is deliberately independent of the analytic predictions in
`tables`: it anchors a seed path and extends it by depth-first search, so
any agreement between the two is evidence, not tautology.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import LabeledGraph, Edge

Path = tuple[int, ...]


class PathTooLongError(ValueError):
    pass


class NotCubicError(ValueError):
    pass


@dataclass(frozen=True)
class OctagonTriple:
    """Per-orbit 8-cycle counts (outer, spoke, inner) of an I- or DP-graph."""

    sigma_outer: int
    sigma_spoke: int
    sigma_inner: int

    def is_constant(self) -> bool:
        return self.sigma_outer == self.sigma_spoke == self.sigma_inner

    def __add__(self, other: "OctagonTriple") -> "OctagonTriple":
        return OctagonTriple(
            self.sigma_outer + other.sigma_outer,
            self.sigma_spoke + other.sigma_spoke,
            self.sigma_inner + other.sigma_inner,
        )

    def scaled(self, factor: int) -> "OctagonTriple":
        return OctagonTriple(
            self.sigma_outer * factor,
            self.sigma_spoke * factor,
            self.sigma_inner * factor,
        )


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of an [l,lambda,m] scan: the constant, or two witness paths."""

    l: int
    m: int
    lambda_value: int | None
    witness: tuple[Path, int, Path, int] | None = None

    @property
    def is_regular(self) -> bool:
        return self.lambda_value is not None


def _validate_path(g: LabeledGraph, path: Sequence[int]) -> None:
    if len(path) == 0:
        raise ValueError("seed path must contain at least one vertex")
    if len(set(path)) != len(path):
        raise ValueError(f"seed path repeats a vertex: {path}")
    for v in path:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a},{b}) is not an edge")


def _truncated_distances(g: LabeledGraph, source: int, radius: int) -> dict[int, int]:
    """BFS from source out to `radius`; vertices beyond it are absent.

    Returns a dict so the cost is bounded by the ball size, not by |V|;
    per-edge 8-cycle counts stay constant-time on huge bounded-degree
    graphs.
    """
    dist = {source: 0}
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        if d > radius:
            continue
        for v in adj[u]:
            if v not in dist:
                dist[v] = d
                queue.append(v)
    return dist


def count_cycles_through_path(g: LabeledGraph, path: Sequence[int], m: int) -> int:
    """Number of distinct m-cycles containing `path` as a subpath.

    Cycles are counted as undirected vertex sets with cyclic adjacency;
    orientation and rotation are quotiented out.  A seed with at least one
    edge anchors the cycle completely, so each cycle is found exactly once;
    a single-vertex seed finds each cycle in both directions, so that count
    is halved.
    """
    _validate_path(g, path)
    t = len(path) - 1
    if t >= m:
        raise PathTooLongError(f"seed has {t} edges, must be < m={m}")
    if m < 3:
        raise ValueError(f"cycle length must be >= 3, got {m}")

    adj = g.adj
    target = path[0]
    start = path[-1]
    remaining = m - t
    if remaining == 1:
        return 1 if g.has_edge(start, target) else 0

    dist = _truncated_distances(g, target, remaining - 1)
    far = remaining
    blocked = set(path)
    dist_get = dist.get

    def extend(cur: int, left: int) -> int:
        if left == 1:
            return 1 if g.has_edge(cur, target) else 0
        total = 0
        nxt = left - 1
        for w in adj[cur]:
            if w not in blocked and dist_get(w, far) <= nxt:
                blocked.add(w)
                total += extend(w, nxt)
                blocked.discard(w)
        return total

    count = extend(start, remaining)
    if t == 0:
        # both traversal directions found the same anchored cycle
        assert count % 2 == 0
        count //= 2
    return count


def octagon_value(g: LabeledGraph, edge: Edge) -> int:
    """Number of distinct 8-cycles through `edge`.

    The depth-8 search never leaves the radius-4 ball around the edge, so
    on bounded-degree graphs this is a constant-time local computation.
    """
    return count_cycles_through_path(g, edge, 8)


def octagon_partition(g: LabeledGraph) -> dict[int, list[Edge]]:
    """Partition of E(g) by the per-edge 8-cycle count.

    Only defined for cubic graphs, where the count is a local quantity.
    """
    if not all(len(nbrs) == 3 for nbrs in g.adj):
        raise NotCubicError("octagon partition requires a cubic graph")
    parts: dict[int, list[Edge]] = {}
    for e in g.edges():
        parts.setdefault(octagon_value(g, e), []).append(e)
    return parts


def _paths_of_length(g: LabeledGraph, l: int) -> Iterator[Path]:
    """All undirected paths on l+1 vertices, each reported exactly once.

    A path is emitted with its smaller endpoint first; for l = 0 the paths
    are the single vertices.
    """
    if l == 0:
        for v in range(g.n):
            yield (v,)
        return

    adj = g.adj
    path = [0] * (l + 1)
    on_path = bytearray(g.n)

    def rec(depth: int) -> Iterator[Path]:
        if depth == l:
            if path[0] < path[l]:
                yield tuple(path)
            return
        for w in adj[path[depth]]:
            if not on_path[w]:
                path[depth + 1] = w
                on_path[w] = 1
                yield from rec(depth + 1)
                on_path[w] = 0

    for v0 in range(g.n):
        path[0] = v0
        on_path[v0] = 1
        yield from rec(0)
        on_path[v0] = 0


def regularity_scan(g: LabeledGraph, l: int, m: int) -> RegularityReport:
    """Check whether every path on l+1 vertices lies on the same number of
    m-cycles; early-exits with a two-path witness on the first mismatch.
    """
    if l >= m:
        raise ValueError(f"need l < m, got l={l}, m={m}")
    first_path: Path | None = None
    first_count = 0
    for p in _paths_of_length(g, l):
        c = count_cycles_through_path(g, p, m)
        if first_path is None:
            first_path, first_count = p, c
        elif c != first_count:
            return RegularityReport(l, m, None, (first_path, first_count, p, c))
    # graphs with no paths of this length are vacuously regular with 0
    return RegularityReport(l, m, first_count if first_path is not None else 0)


def count_cycles(g: LabeledGraph, m: int) -> int:
    """Total number of m-cycles in the graph.

    Every m-cycle passes through exactly m vertices, so summing the
    anchored per-vertex counts and dividing by m is exact.
    """
    total = sum(count_cycles_through_path(g, (v,), m) for v in range(g.n))
    assert total % m == 0
    return total // m
