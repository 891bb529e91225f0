"""Cayley graph construction, block structure, censuses, exports.

networkx is used here as an independent oracle for adjacency-level
facts (girth, 4-cycle counts, graph6); the package itself never
imports it.
"""

from __future__ import annotations

import math

import networkx as nx
import pytest

from conftest import hypercube, path_graph
from ugconn.cayley import (
    MASK_ORDER_LIMIT,
    MEMBER_LIMIT,
    CapacityError,
    DenseGraph,
    canonical_four_cycle,
    common_neighbor_count,
    component_analysis,
    cross_edges,
    edge_label,
    enumerate_4cycles,
    find_cn_triple_violation,
    find_edge_cn_violation,
    girth,
    max_common_neighbors,
    out_neighbors,
    to_dot,
    to_edgelist,
    to_graph6,
    with_redirected_cross_edge,
)
from ugconn.genset import GeneratingGraphError
from ugconn.perms import apply_swap, parse_perm_string, rank_perm
from ugconn import build_cayley, build_generating_graph
from ugconn.cuts import build_cycle_neighborhood_cut


def _nx_of(g) -> nx.Graph:
    dense = g.dense if hasattr(g, "dense") else g
    H = nx.Graph()
    H.add_nodes_from(range(dense.order))
    for u in range(dense.order):
        for v in dense.neighbors[u]:
            if u < v:
                H.add_edge(u, v)
    return H


def _girth_oracle(H: nx.Graph) -> int | None:
    best = math.inf
    for u, v in list(H.edges):
        H.remove_edge(u, v)
        try:
            best = min(best, nx.shortest_path_length(H, u, v) + 1)
        except nx.NetworkXNoPath:
            pass
        H.add_edge(u, v)
    return None if best is math.inf else best


def _four_cycle_oracle(H: nx.Graph) -> int:
    total = 0
    nodes = sorted(H)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            c = sum(1 for _ in nx.common_neighbors(H, u, v))
            total += c * (c - 1) // 2
    return total // 2


def test_basic_counts(mb4, ug5, b4, star4):
    assert (mb4.order, mb4.size, mb4.degree) == (24, 48, 4)
    assert (ug5.order, ug5.size, ug5.degree) == (120, 300, 5)
    assert (b4.order, b4.size, b4.degree) == (24, 36, 3)
    assert (star4.order, star4.size, star4.degree) == (24, 36, 3)


def test_vertices_are_rank_ordered(mb4):
    assert mb4.perms[0] == (1, 2, 3, 4)
    for v in (0, 1, 7, 23):
        assert rank_perm(mb4.perms[v]) == v
    assert mb4.vertex((2, 1, 4, 3)) == rank_perm((2, 1, 4, 3))
    assert mb4.perm_str(mb4.vertex(parse_perm_string("4321"))) == "4321"


def test_adjacency_matches_generator_action(mb4, ug5):
    for G in (mb4, ug5):
        for u in range(0, G.order, 7):
            expected = sorted(
                G.vertex(apply_swap(G.perms[u], k, l)) for k, l in G.gen.edges
            )
            assert list(G.neighbors(u)) == expected


def test_adjacency_table_mirrors_neighbor_tuples(mb4):
    assert mb4.adj_table.shape == (24, 4)
    for u in range(24):
        assert list(mb4.adj_table[u]) == list(mb4.neighbors(u))


def test_bipartite_by_parity(mb4):
    # every generator is a transposition, so edges flip parity
    from ugconn.perms import parity

    for u in range(mb4.order):
        for v in mb4.neighbors(u):
            assert parity(mb4.perms[u]) != parity(mb4.perms[v])


def test_block_decomposition(mb4, ug5):
    for G in (mb4, ug5):
        pos = G.peel.position
        assert pos == G.n
        for i in range(1, G.n + 1):
            members = G.block_members(i)
            assert len(members) == math.factorial(G.n - 1)
            assert all(G.perms[v][pos - 1] == i for v in members)
            assert all(G.block_of[v] == i for v in members)


def test_mb4_blocks_are_six_cycles(mb4):
    for i in range(1, 5):
        members = set(mb4.block_members(i))
        for v in members:
            inside = [w for w in mb4.neighbors(v) if w in members]
            assert len(inside) == 2


def test_out_neighbors_counts_and_examples(mb4, ug5):
    for v in range(mb4.order):
        outs = out_neighbors(mb4, v)
        assert len(outs) == 2
        assert all(mb4.block_of[w] != mb4.block_of[v] for w in outs)
    for v in range(0, ug5.order, 11):
        assert len(out_neighbors(ug5, v)) == 1
    assert {mb4.perm_str(v) for v in out_neighbors(mb4, 0)} == {"1243", "4231"}
    assert {ug5.perm_str(v) for v in out_neighbors(ug5, 0)} == {"12354"}


def test_graphs_without_blocks_refuse_block_operations(mb3):
    assert mb3.peel is None
    with pytest.raises(GeneratingGraphError):
        mb3.block_members(1)
    with pytest.raises(GeneratingGraphError):
        out_neighbors(mb3, 0)


def test_cross_edge_counts(mb4, mb5, ug5):
    for G, expected in ((mb4, 4), (mb5, 12), (ug5, 6)):
        for i in range(1, G.n + 1):
            for j in range(i + 1, G.n + 1):
                ce = cross_edges(G, i, j)
                assert len(ce.edges) == expected
                for u, v in ce.edges:
                    assert G.block_of[u] == i and G.block_of[v] == j
                    assert G.dense.adjacent(u, v)


def test_edge_label_identifies_the_generator(mb4):
    u = 0
    for v in mb4.neighbors(u):
        k, l = edge_label(mb4, u, v)
        assert (k, l) in mb4.gen.edges
        assert apply_swap(mb4.perms[u], k, l) == mb4.perms[v]
    with pytest.raises(ValueError):
        edge_label(mb4, 0, 23)  # 4321 is not adjacent to 1234


def test_common_neighbor_count_example(mb4):
    u = mb4.vertex((1, 2, 3, 4))
    v = mb4.vertex((2, 1, 4, 3))
    assert common_neighbor_count(mb4.dense, u, v) == 2
    value, pair = max_common_neighbors(mb4.dense)
    assert value == 2
    assert common_neighbor_count(mb4.dense, *pair) == 2


def test_four_cycle_census_against_oracle(mb4, mb5, ug5):
    for G, expected in ((mb4, 12), (mb5, 150), (ug5, 120)):
        cycles = enumerate_4cycles(G)
        assert len(cycles) == expected
        assert len(set(cycles)) == expected
        assert _four_cycle_oracle(_nx_of(G)) == expected
        for a, b, c, d in cycles[:20]:
            assert G.dense.adjacent(a, b) and G.dense.adjacent(b, c)
            assert G.dense.adjacent(c, d) and G.dense.adjacent(d, a)
            assert a == min((a, b, c, d))
            assert b < d


def test_canonical_four_cycle_runs_through_identity(mb4, ug5):
    for G in (mb4, ug5):
        cyc = canonical_four_cycle(G)
        assert cyc[0] == 0
        labels = []
        for idx in range(4):
            u, v = cyc[idx], cyc[(idx + 1) % 4]
            assert G.dense.adjacent(u, v)
            labels.append(edge_label(G, u, v))
        # opposite edges carry the same generator, adjacent ones disjoint
        assert labels[0] == labels[2] and labels[1] == labels[3]
        assert not set(labels[0]) & set(labels[1])
    assert {mb4.perm_str(v) for v in canonical_four_cycle(mb4)} == {
        "1234",
        "1243",
        "2143",
        "2134",
    }


def test_girth_matches_oracle(mb4, ug5, b3, b4, star4):
    for G, expected in ((mb4, 4), (ug5, 4), (b3, 6), (b4, 4), (star4, 6)):
        assert girth(G) == expected
        assert _girth_oracle(_nx_of(G)) == expected
    assert girth(mb4, all_sources=True) == 4


def test_girth_of_a_forest_is_none():
    k2 = build_cayley(build_generating_graph(2, [(1, 2)]))
    assert girth(k2) is None


def test_component_analysis_whole_graph(mb4):
    an = component_analysis(mb4.dense, ())
    assert an.component_count == 1
    assert an.largest() == 24 and an.residual() == 0
    assert an.cyclic_component_count() == 1
    assert an.components[0].members == tuple(range(24))


def test_component_analysis_after_cycle_neighborhood_cut(mb4, ug5):
    cut4 = build_cycle_neighborhood_cut(mb4, canonical_four_cycle(mb4))
    an = component_analysis(mb4.dense, cut4)
    assert an.component_count == 4
    assert [c.vertices for c in an.components] == [4, 4, 4, 4]
    assert all(c.contains_cycle for c in an.components)
    assert (an.largest(), an.residual()) == (4, 12)
    assert an.cyclic_component_count() == 4

    cut5 = build_cycle_neighborhood_cut(ug5, canonical_four_cycle(ug5))
    an5 = component_analysis(ug5.dense, cut5)
    assert (an5.largest(), an5.residual()) == (104, 4)
    big = an5.components[an5.largest_index]
    assert big.members is None  # withheld above MEMBER_LIMIT
    assert MEMBER_LIMIT == 24
    small = [c for c in an5.components if c.vertices == 4]
    assert small and all(c.members is not None and c.contains_cycle for c in small)


def test_component_analysis_isolating_cut(mb4):
    fault = tuple(mb4.neighbors(5))
    an = component_analysis(mb4.dense, fault)
    assert an.component_count == 2
    assert an.residual() == 1
    assert (5,) in [c.members for c in an.components]


def test_component_analysis_plain_fallback_beyond_mask_limit():
    order = MASK_ORDER_LIMIT + 100
    nbrs = tuple(
        tuple(w for w in (v - 1, v + 1) if 0 <= w < order) for v in range(order)
    )
    big = DenseGraph(nbrs)
    assert not big.has_masks()
    with pytest.raises(CapacityError):
        big.masks
    assert girth(big) is None  # plain BFS, no mask dependency
    an = component_analysis(big, (order // 2,))
    assert an.component_count == 2
    assert an.largest() > MEMBER_LIMIT
    assert an.components[an.largest_index].members is None
    ring = DenseGraph(
        tuple(
            tuple(sorted(((v - 1) % order, (v + 1) % order))) for v in range(order)
        )
    )
    assert girth(ring) == order


def test_structure_probes_pass_on_mb4_and_fire_on_q3(mb4, q3):
    assert find_edge_cn_violation(mb4.dense) is None
    assert find_cn_triple_violation(mb4.dense) is None
    # the 3-cube realizes the forbidden triple: two cn=2 pairs whose
    # outer vertices still share a neighbor
    assert find_edge_cn_violation(q3) is None
    triple = find_cn_triple_violation(q3)
    assert triple is not None
    u, v, w = triple
    assert common_neighbor_count(q3, u, v) == 2
    assert common_neighbor_count(q3, v, w) == 2
    assert common_neighbor_count(q3, u, w) >= 1


def test_q3_helper_is_the_hypercube(q3):
    assert q3.order == 8
    assert girth(q3) == 4
    assert _girth_oracle(_nx_of(q3)) == 4


def test_redirected_cross_edge_breaks_the_counts(mb4):
    bad = with_redirected_cross_edge(mb4)
    assert bad.order == mb4.order
    sizes = {
        (i, j): len(cross_edges(bad, i, j).edges)
        for i in range(1, 5)
        for j in range(i + 1, 5)
    }
    assert any(v != 4 for v in sizes.values())
    overlap = [
        (u, v)
        for u in range(bad.order)
        for v in range(u + 1, bad.order)
        if bad.block_of[u] == bad.block_of[v]
        and set(out_neighbors(bad, u)) & set(out_neighbors(bad, v))
    ]
    assert overlap


def test_build_capacity_is_n8():
    with pytest.raises(CapacityError):
        build_cayley(
            build_generating_graph(
                9, [(i, i + 1) for i in range(1, 9)] + [(1, 9)]
            )
        )
    b8 = path_graph(8)
    assert b8.order == math.factorial(8)
    assert not b8.dense.has_masks()


def test_graph6_roundtrip_and_capacity(mb4, b4, ug5):
    for G in (mb4, b4):
        parsed = nx.from_graph6_bytes(to_graph6(G).encode())
        assert set(parsed.edges) == set(_nx_of(G).edges)
    with pytest.raises(CapacityError):
        to_graph6(ug5)  # graph6 stops at 62 vertices


def test_dot_and_edgelist_formats(mb4):
    dot = to_dot(mb4)
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert dot.count(" -- ") == mb4.size
    assert 'v0 [label="1234"]' in dot

    lines = to_edgelist(mb4).splitlines()
    assert lines[0] == "n=4 order=24 degree=4"
    assert len(lines) == 1 + mb4.size
    seen = set()
    for line in lines[1:]:
        a, b = (int(x) for x in line.split())
        seen.add((a, b))
        assert a < b
        assert mb4.dense.adjacent(a, b)
    assert len(seen) == mb4.size


def test_hypercube_conftest_helper_sorted():
    q4 = hypercube(4)
    assert q4.order == 16
    assert all(list(t) == sorted(t) for t in q4.neighbors)
