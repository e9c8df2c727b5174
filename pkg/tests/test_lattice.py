from math import comb

import pytest

from polaris.lattice import (
    DownEdge,
    chain_decomposition,
    children_i,
    edge_between,
    enumerate_points,
    is_boundary_edge,
    leq_i,
    make_edge,
    min_support,
    parents_i,
    up_graph,
)


def test_points_are_lex_descending_and_counted():
    pts = enumerate_points(3, 2)
    assert pts == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    for n in range(1, 5):
        for d in range(0, 5):
            assert len(enumerate_points(n, d)) == comb(n + d - 1, d)


def test_bounded_points():
    assert enumerate_points(4, 2, (1, 1, 1, 1)) == [
        (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)
    ]


def test_partial_order_and_covers():
    assert leq_i((1, 1, 0), (2, 0, 0), 0)
    assert not leq_i((2, 0, 0), (1, 1, 0), 0)
    with pytest.raises(ValueError):
        leq_i((1, 0), (1, 1), 0)
    a = (1, 1, 1)
    for i in range(3):
        for b in parents_i(a, i):
            assert leq_i(a, b, i) and b[i] == a[i] + 1
            assert a in children_i(b, i)
    assert children_i((0, 2, 1), 0) == []


def test_edges():
    e = make_edge((1, 1, 1), 2, 0)
    assert e == DownEdge((1, 1, 1), 0, 2)
    assert e.endpoints == ((0, 1, 1), (1, 1, 0))
    assert edge_between((0, 1, 1), (1, 1, 0)) == e
    assert edge_between((2, 0, 0), (0, 2, 0)) is None
    assert is_boundary_edge(DownEdge((2, 1, 0), 0, 1))
    assert not is_boundary_edge(e)
    verts, edges = up_graph((1, 0, 0), 2)
    assert len(verts) == 3 and len(edges) == 3
    with pytest.raises(ValueError):
        make_edge((1, 0, 1), 0, 1)


def test_min_support_of_zero_is_infinite():
    assert min_support((0, 0, 0)) == float("inf")
    assert min_support((0, 2, 1)) == 1


@pytest.mark.parametrize("n,d", [(2, 3), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_chains_partition_each_poset(n, d):
    pts = set(enumerate_points(n, d))
    for i in range(n):
        chains = chain_decomposition(n, d, i)
        seen = [a for c in chains for a in c.elements]
        assert sorted(seen) == sorted(pts)
        for c in chains:
            assert [a[i] for a in c.elements] == list(range(len(c.elements)))
            assert [a[i] for a in c.extension] == list(range(d + 1))
            for lo, hi in zip(c.extension, c.extension[1:]):
                assert leq_i(lo, hi, i)


def test_chain_order_follows_total_degree():
    ps = [c.p for c in chain_decomposition(4, 2, 0)]
    assert ps[0] == (0, 0, 0, 0)
    assert ps.index((0, 0, 1, 0)) < ps.index((0, 0, 0, 1))
    assert [sum(p) for p in ps] == sorted(sum(p) for p in ps)
