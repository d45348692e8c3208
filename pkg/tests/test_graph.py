import pytest
from hypothesis import given, strategies as st

from hocospan.graph import (
    Graph,
    InvalidVertexError,
    attach_edges,
    betti_numbers,
    component_labels,
    components,
    disjoint_union,
    relabel,
    subdivide_edge,
)
from oracles import fundamental_cycle_rank, path_components

THETA = Graph(2, ((0, 1), (0, 1), (0, 1)))


@st.composite
def graphs(draw, max_vertices=8, max_edges=10):
    n = draw(st.integers(0, max_vertices))
    if n == 0:
        return Graph(0)
    vertex = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges))
    return Graph(n, tuple(edges))


# components


def test_components_single_point():
    assert components(Graph(1)) == {0: (0,)}


def test_components_parallel_edges():
    g = Graph(2, ((0, 1),) * 3)
    assert components(g) == {0: (0, 1)}
    assert {frozenset(c) for c in path_components(2, g.edges)} == {frozenset({0, 1})}


def test_components_isolated_vertex():
    g = Graph(3, ((0, 1),))
    assert components(g) == {0: (0, 1), 2: (2,)}
    assert sorted(map(sorted, path_components(3, g.edges))) == [[0, 1], [2]]


def test_empty_graph():
    assert components(Graph()) == {}
    assert betti_numbers(Graph()) == {}


@given(graphs())
def test_components_match_path_search(g):
    labels = component_labels(g)
    for comp in path_components(g.vertex_count, g.edges):
        assert {labels[v] for v in comp} == {min(comp)}


# betti numbers


@pytest.mark.parametrize("k", [0, 1, 2, 5])
def test_bouquet_of_circles(k):
    assert betti_numbers(Graph(1, ((0, 0),) * k)) == {0: k}


def test_theta_graph():
    assert betti_numbers(THETA) == {0: 2}
    assert fundamental_cycle_rank(2, THETA.edges) == {0: 2}


@given(graphs())
def test_euler_sum(g):
    total = sum(betti_numbers(g).values())
    assert total == g.edge_count - g.vertex_count + len(components(g))


@given(graphs())
def test_betti_matches_cycle_rank(g):
    assert betti_numbers(g) == fundamental_cycle_rank(g.vertex_count, g.edges)


@given(graphs(), st.randoms(use_true_random=False))
def test_betti_invariant_under_edge_order(g, rnd):
    edges = list(g.edges)
    rnd.shuffle(edges)
    flipped = tuple((v, u) if rnd.random() < 0.5 else (u, v) for u, v in edges)
    assert betti_numbers(Graph(g.vertex_count, flipped)) == betti_numbers(g)


@given(graphs(), st.randoms(use_true_random=False))
def test_betti_multiset_invariant_under_relabeling(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert sorted(betti_numbers(h).values()) == sorted(betti_numbers(g).values())
    for c, b in betti_numbers(g).items():
        assert betti_numbers(h)[component_labels(h)[perm[c]]] == b


# disjoint union


def test_disjoint_union_empty():
    g, fm, gm = disjoint_union(Graph(), Graph())
    assert g == Graph() and fm == [] and gm == []


def test_disjoint_union_points():
    g, fm, gm = disjoint_union(Graph(1), Graph(1))
    assert g == Graph(2) and fm == [0] and gm == [1]


def test_disjoint_union_loop_and_edge():
    g, fm, gm = disjoint_union(Graph(1, ((0, 0),)), Graph(2, ((0, 1),)))
    assert g.vertex_count == 3 and g.edge_count == 2
    assert betti_numbers(g) == {0: 1, 1: 0}
    assert betti_numbers(g) == fundamental_cycle_rank(3, g.edges)
    assert fm == [0] and gm == [1, 2]


@given(graphs(), graphs())
def test_disjoint_union_maps_partition_vertices(g, h):
    u, fm, gm = disjoint_union(g, h)
    assert sorted(fm + gm) == list(range(u.vertex_count))
    assert sorted(betti_numbers(u).values()) == sorted(
        list(betti_numbers(g).values()) + list(betti_numbers(h).values())
    )


# attaching edges


def test_attach_interval_is_contractible():
    g = attach_edges(Graph(2), [(0, 1)])
    assert betti_numbers(g) == {0: 0}


def test_attach_two_intervals_makes_a_circle():
    g = attach_edges(Graph(2), [(0, 1), (0, 1)])
    assert betti_numbers(g) == {0: 1}


def test_attach_loop():
    g = attach_edges(Graph(1), [(0, 0)])
    assert betti_numbers(g) == {0: 1} == fundamental_cycle_rank(1, g.edges)


def test_attach_rejects_bad_vertex():
    with pytest.raises(InvalidVertexError):
        attach_edges(Graph(2), [(0, 2)])


def test_graph_rejects_bad_vertex():
    with pytest.raises(InvalidVertexError):
        Graph(1, ((0, 1),))


@given(graphs(max_vertices=6).filter(lambda g: g.vertex_count > 0), st.data())
def test_attach_edge_changes_betti_or_components(g, data):
    u = data.draw(st.integers(0, g.vertex_count - 1))
    v = data.draw(st.integers(0, g.vertex_count - 1))
    h = attach_edges(g, [(u, v)])
    before, after = betti_numbers(g), betti_numbers(h)
    labels = component_labels(g)
    if labels[u] == labels[v]:
        assert len(after) == len(before)
        c = labels[u]
        assert after[c] == before[c] + 1
        assert {k: b for k, b in after.items() if k != c} == {k: b for k, b in before.items() if k != c}
    else:
        assert len(after) == len(before) - 1
        assert sum(after.values()) == sum(before.values())


# subdivision


def test_subdivide_loop():
    g = subdivide_edge(Graph(1, ((0, 0),)), 0)
    assert g == Graph(2, ((0, 1), (1, 0)))
    assert betti_numbers(g) == {0: 1}


def test_subdivide_interval():
    g = subdivide_edge(Graph(2, ((0, 1),)), 0)
    assert g.vertex_count == 3 and g.edge_count == 2
    assert betti_numbers(g) == {0: 0}


@pytest.mark.parametrize("i", range(3))
def test_subdivide_theta(i):
    g = subdivide_edge(THETA, i)
    assert betti_numbers(g) == {0: 2} == fundamental_cycle_rank(3, g.edges)


def test_subdivide_bad_index():
    with pytest.raises(IndexError):
        subdivide_edge(THETA, 3)


@given(graphs(), st.randoms(use_true_random=False))
def test_subdivision_preserves_betti(g, rnd):
    if not g.edges:
        return
    h = subdivide_edge(g, rnd.randrange(g.edge_count))
    assert betti_numbers(h) == betti_numbers(g)


def test_graph_is_hashable_value():
    assert hash(Graph(2, [(0, 1)])) == hash(Graph(2, ((0, 1),)))
