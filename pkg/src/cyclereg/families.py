"""Deterministic generators for I(n,j,k), G(n,k), DP(n,k), Q_n and FQ_n,
plus the parameter-level isomorphism rules of those families.

Vertex id conventions (used by generators, certificates and tests alike):

* I(n,j,k):  u_i = i, w_i = n + i.
* DP(n,k):   u_i = i, w_i = n + i, x_i = 2n + i, y_i = 3n + i.
* Q_n, FQ_n: ids are the binary strings themselves, bit b of the integer
  holding string position b + 1; the diagonal partner of v is its bitwise
  complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .graph import Edge, LabeledGraph, Role, build_graph

OUTER = "outer"
SPOKE = "spoke"
INNER = "inner"
DIAGONAL = "d"


class ParamOutOfRangeError(ValueError):
    pass


class OddNError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IParams:
    n: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ParamOutOfRangeError(f"n must be >= 3, got {self.n}")
        for name, val in (("j", self.j), ("k", self.k)):
            if not 1 <= val or 2 * val >= self.n:
                raise ParamOutOfRangeError(
                    f"{name} must satisfy 1 <= {name} < n/2, got {val} for n={self.n}"
                )


@dataclass(frozen=True, order=True)
class DPParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ParamOutOfRangeError(f"n must be >= 3, got {self.n}")
        if not 1 <= self.k or 2 * self.k >= self.n:
            raise ParamOutOfRangeError(
                f"k must satisfy 1 <= k < n/2, got {self.k} for n={self.n}"
            )


@dataclass(frozen=True, order=True)
class FQParams:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParamOutOfRangeError(f"dimension must be >= 1, got {self.n}")


def generate_i_graph(p: IParams) -> LabeledGraph:
    """I(n,j,k): outer edges u_i u_{i+j}, inner w_i w_{i+k}, spokes u_i w_i.

    2n vertices, 3n edges, cubic; connected iff gcd(n,j,k) == 1 (for d > 1
    it falls apart into d copies of the smaller I-graph, by design).
    """
    n, j, k = p.n, p.j, p.k
    edges: list[Edge] = []
    roles: dict[Edge, Role] = {}
    names: dict[int, str] = {}
    for i in range(n):
        names[i] = f"u{i}"
        names[n + i] = f"w{i}"
    for i in range(n):
        for a, b, role in (
            (i, (i + j) % n, OUTER),
            (n + i, n + (i + k) % n, INNER),
            (i, n + i, SPOKE),
        ):
            e = (a, b) if a < b else (b, a)
            edges.append(e)
            roles[e] = role
    return build_graph(2 * n, edges, edge_roles=roles, vertex_names=names)


def generate_gp(n: int, k: int) -> LabeledGraph:
    """Generalized Petersen graph G(n,k), the I-graph with j = 1."""
    return generate_i_graph(IParams(n, 1, k))


def generate_dp(p: DPParams) -> LabeledGraph:
    """DP(n,k): two GP-like copies with crossed inner edges w_i y_{i+k}, y_i w_{i+k}."""
    n, k = p.n, p.k
    edges: list[Edge] = []
    roles: dict[Edge, Role] = {}
    names: dict[int, str] = {}
    u, w, x, y = 0, n, 2 * n, 3 * n
    for i in range(n):
        names[u + i] = f"u{i}"
        names[w + i] = f"w{i}"
        names[x + i] = f"x{i}"
        names[y + i] = f"y{i}"
    for i in range(n):
        nxt = (i + 1) % n
        stepped = (i + k) % n
        for a, b, role in (
            (u + i, u + nxt, OUTER),
            (x + i, x + nxt, OUTER),
            (u + i, w + i, SPOKE),
            (x + i, y + i, SPOKE),
            (w + i, y + stepped, INNER),
            (y + i, w + stepped, INNER),
        ):
            e = (a, b) if a < b else (b, a)
            edges.append(e)
            roles[e] = role
    return build_graph(4 * n, edges, edge_roles=roles, vertex_names=names)


def _bits_name(v: int, width: int) -> str:
    return "".join(str((v >> b) & 1) for b in range(width))


def generate_hypercube(n: int) -> LabeledGraph:
    """Q_n on 2^n vertices; edge role = 1-based differing bit position."""
    if n < 0:
        raise ParamOutOfRangeError(f"dimension must be >= 0, got {n}")
    size = 1 << n
    edges: list[Edge] = []
    roles: dict[Edge, Role] = {}
    names = {v: _bits_name(v, n) for v in range(size)}
    for v in range(size):
        for b in range(n):
            t = v ^ (1 << b)
            if v < t:
                edges.append((v, t))
                roles[(v, t)] = b + 1
    return build_graph(size, edges, edge_roles=roles, vertex_names=names)


def generate_folded_cube(p: FQParams) -> LabeledGraph:
    """FQ_n = Q_{n-1} plus the complementary-pair diagonal matching.

    2^(n-1) vertices of degree n for n >= 3.  FQ_1 is K_1 and FQ_2 is K_2
    (the would-be diagonal of FQ_2 coincides with the lone hypercube edge,
    so the single edge is tagged as the diagonal).
    """
    n = p.n
    if n == 1:
        return build_graph(1, [], vertex_names={0: ""})
    if n == 2:
        return build_graph(
            2, [(0, 1)], edge_roles={(0, 1): DIAGONAL}, vertex_names={0: "0", 1: "1"}
        )
    width = n - 1
    size = 1 << width
    mask = size - 1
    edges: list[Edge] = []
    roles: dict[Edge, Role] = {}
    names = {v: _bits_name(v, width) for v in range(size)}
    for v in range(size):
        for b in range(width):
            t = v ^ (1 << b)
            if v < t:
                edges.append((v, t))
                roles[(v, t)] = b + 1
        t = v ^ mask
        if v < t:
            edges.append((v, t))
            roles[(v, t)] = DIAGONAL
    return build_graph(size, edges, edge_roles=roles, vertex_names=names)


def _fold(x: int, n: int) -> int:
    x %= n
    return min(x, n - x)


def canonical_i_params(p: IParams) -> IParams:
    """Lexicographically smallest (n,j,k) in the isomorphism class of p.

    I(n,j,k) ~ I(n,j',k') iff {j',k'} = {aj, +-ak} mod n for some a coprime
    to n; folding representatives into (0, n/2) absorbs the sign choice, so
    a plain scan over the multipliers suffices (n is small, clarity wins).
    """
    n = p.n
    best: tuple[int, int] | None = None
    for a in range(1, n):
        if gcd(a, n) != 1:
            continue
        pair = tuple(sorted((_fold(a * p.j, n), _fold(a * p.k, n))))
        if best is None or pair < best:
            best = pair
    assert best is not None
    return IParams(n, best[0], best[1])


def dp_even_twin(p: DPParams) -> DPParams | None:
    """For even n, the isomorphic partner DP(n, n/2 - k); None for odd n."""
    if p.n % 2 != 0:
        return None
    return DPParams(p.n, p.n // 2 - p.k)


def dp_twin_map(p: DPParams) -> dict[int, int]:
    """The explicit vertex bijection DP(n,k) -> DP(n, n/2 - k) for even n:
    u_i -> u_i, w_i -> w_i, x_i -> x_{i+n/2}, y_i -> y_{i+n/2}.
    """
    n = p.n
    if n % 2 != 0:
        raise OddNError(f"n must be even, got {n}")
    half = n // 2
    mapping: dict[int, int] = {}
    for i in range(n):
        mapping[i] = i
        mapping[n + i] = n + i
        mapping[2 * n + i] = 2 * n + (i + half) % n
        mapping[3 * n + i] = 3 * n + (i + half) % n
    return mapping


def dp_canonical_params(p: DPParams) -> DPParams:
    """Representative with the smaller k of the even-n twin pair."""
    twin = dp_even_twin(p)
    if twin is not None and twin.k < p.k:
        return twin
    return p


def dp_gp_equivalent(p: DPParams) -> tuple[int, int] | None:
    """GP parameters (2n, k') isomorphic to DP(n,k), when they exist.

    Requires odd n and gcd(n,k) = 1; k' is the unique even solution of
    k*k' = +-1 (mod n) in (0, n).
    """
    n, k = p.n, p.k
    if n % 2 == 0 or gcd(n, k) != 1:
        return None
    inv = pow(k, -1, n)
    kp = inv if inv % 2 == 0 else n - inv
    return (2 * n, kp)
