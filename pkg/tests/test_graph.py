import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclereg import (
    DuplicateEdgeError,
    FQParams,
    IParams,
    SelfLoopError,
    UNREACHABLE,
    VertexOutOfRangeError,
    ball,
    bfs_distances,
    build_graph,
    connected_components,
    generate_folded_cube,
    generate_gp,
    generate_i_graph,
    is_bipartite,
    is_regular,
)

PETERSEN = generate_gp(5, 2)


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert g.adj == ((1, 2), (0, 2), (0, 1))


def test_build_rejects_duplicate_in_either_orientation():
    with pytest.raises(DuplicateEdgeError):
        build_graph(2, [(0, 1), (1, 0)])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(2, [(0, 0)])


def test_build_rejects_out_of_range_vertex():
    with pytest.raises(VertexOutOfRangeError):
        build_graph(4, [(0, 4)])


def test_is_regular():
    assert is_regular(PETERSEN, 3)
    assert not is_regular(build_graph(3, [(0, 1), (1, 2), (2, 0)]), 3)
    assert is_regular(build_graph(0, []), 7)  # vacuous


def test_components_of_disconnected_i_graph():
    g = generate_i_graph(IParams(6, 2, 2))  # gcd = 2: two triangular prisms
    comps = connected_components(g)
    assert len(comps) == 2
    assert all(len(c) == 6 for c in comps)


def test_components_trivia():
    assert len(connected_components(PETERSEN)) == 1
    two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert [len(c) for c in connected_components(two_triangles)] == [3, 3]


def test_bfs_path_and_unreachable():
    path = build_graph(3, [(0, 1), (1, 2)])
    assert bfs_distances(path, 0) == [0, 1, 2]
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    d = bfs_distances(two_edges, 0)
    assert d[1] == 1 and d[2] is UNREACHABLE and d[3] is UNREACHABLE


def test_petersen_eccentricity_two():
    # brute force over all sources
    for v in range(PETERSEN.n):
        d = bfs_distances(PETERSEN, v)
        assert max(d) == 2


def test_bipartite():
    assert is_bipartite(generate_folded_cube(FQParams(4)))
    assert not is_bipartite(generate_folded_cube(FQParams(5)))
    assert is_bipartite(build_graph(2, [(0, 1)]))


def test_ball_radius_zero_is_the_edge():
    sub, old = ball(PETERSEN, (0, 1), 0)
    assert sub.n == 2 and sub.m == 1
    assert old == [0, 1]


def test_ball_radius_two_covers_petersen():
    sub, old = ball(PETERSEN, (0, 1), 2)
    assert sub.n == 10 and sub.m == 15


@pytest.mark.parametrize("gen", [PETERSEN, generate_gp(12, 5), generate_gp(26, 5)])
def test_cubic_ball_radius_four_order_bound(gen):
    for e in list(gen.edges())[:6]:
        sub, _ = ball(gen, e, 4)
        assert sub.n <= 62


@st.composite
def edge_sets(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return n, edges


@settings(max_examples=60, deadline=None)
@given(edge_sets())
def test_adjacency_symmetry_and_sortedness(ne):
    n, edges = ne
    g = build_graph(n, edges)
    for u in range(n):
        assert list(g.adj[u]) == sorted(g.adj[u])
        for v in g.adj[u]:
            assert u in g.adj[v]


@settings(max_examples=40, deadline=None)
@given(edge_sets(), st.randoms(use_true_random=False))
def test_bfs_triangle_inequality(ne, rnd):
    n, edges = ne
    g = build_graph(n, edges)
    dists = [bfs_distances(g, s) for s in range(n)]
    for _ in range(20):
        a, b, c = (rnd.randrange(n) for _ in range(3))
        assert dists[a][b] <= dists[a][c] + dists[c][b]


def test_octagon_locality_ball_equals_whole_graph():
    # the 8-cycle count through an edge is determined inside ball(e, 4)
    from cyclereg import octagon_value

    for g in (PETERSEN, generate_gp(12, 5), generate_i_graph(IParams(11, 2, 4))):
        for e in list(g.edges())[:8]:
            sub, old = ball(g, e, 4)
            remap = {o: i for i, o in enumerate(old)}
            inner = octagon_value(sub, (remap[e[0]], remap[e[1]]))
            assert inner == octagon_value(g, e)
