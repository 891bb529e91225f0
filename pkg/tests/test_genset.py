"""Generating-graph validation, classification, peel choice, relabeling."""

from __future__ import annotations

import pytest

from ugconn.genset import (
    CLASSES,
    CYCLE,
    OTHER,
    OTHER_TREE,
    PATH,
    PEELABLE,
    STAR,
    UNICYCLIC_TF,
    GeneratingGraphError,
    build_generating_graph,
    choose_peel,
    classify,
    describe,
    relabel_to_canonical,
    remove_position,
)


def test_class_constants_are_consistent():
    assert set(PEELABLE) == set(CLASSES) - {OTHER}
    assert UNICYCLIC_TF in PEELABLE


def test_classify_star_path_cycle():
    assert build_generating_graph(4, [(1, 2), (1, 3), (1, 4)]).cls == STAR
    assert build_generating_graph(4, [(1, 2), (2, 3), (3, 4)]).cls == PATH
    assert build_generating_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).cls == CYCLE


def test_classify_other_tree_and_unicyclic():
    spider = build_generating_graph(5, [(1, 2), (1, 3), (1, 4), (4, 5)])
    assert spider.cls == OTHER_TREE
    tadpole = build_generating_graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
    assert tadpole.cls == UNICYCLIC_TF


def test_classify_edge_cases_for_tiny_n():
    # single edge is both the path and the star on two vertices
    two = build_generating_graph(2, [(1, 2)])
    assert two.cls in (STAR, PATH)


def test_unicyclic_with_triangle_is_rejected_by_default():
    with pytest.raises(GeneratingGraphError):
        build_generating_graph(3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(GeneratingGraphError):
        build_generating_graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])


def test_triangle_optin_classifies_as_other():
    tri = build_generating_graph(3, [(1, 2), (2, 3), (1, 3)], allow_triangle=True)
    assert tri.cls == OTHER
    k4 = build_generating_graph(
        4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], allow_triangle=True
    )
    assert k4.cls == OTHER


@pytest.mark.parametrize(
    "n,pairs",
    [
        (4, [(1, 2), (2, 3)]),  # disconnected
        (4, [(1, 1), (2, 3), (3, 4)]),  # loop
        (4, [(1, 2), (2, 3), (3, 4), (1, 2)]),  # duplicate
        (4, [(1, 2), (2, 3), (3, 5)]),  # label out of range
        (1, []),  # no edges cannot generate
    ],
)
def test_structural_validation_errors(n, pairs):
    with pytest.raises(GeneratingGraphError):
        build_generating_graph(n, pairs)


def test_edges_are_normalized_and_sorted():
    g = build_generating_graph(4, [(4, 3), (2, 1), (3, 2)])
    assert g.edges == ((1, 2), (2, 3), (3, 4))


def test_classify_matches_build():
    g = build_generating_graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
    assert classify(g) == g.cls


def test_peel_prefers_a_pendant_far_from_the_cycle():
    tadpole = build_generating_graph(6, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (5, 6)])
    pc = choose_peel(tadpole)
    assert pc.position == 6
    assert pc.anchors == (5,)


def test_peel_on_cycle_uses_highest_position_with_two_anchors():
    c4 = build_generating_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    pc = choose_peel(c4)
    assert pc.position == 4
    assert pc.anchors == (1, 3)


def test_peel_on_path_and_star():
    p4 = build_generating_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert choose_peel(p4) == choose_peel(p4)
    assert choose_peel(p4).anchors == (3,)
    s4 = build_generating_graph(4, [(1, 2), (1, 3), (1, 4)])
    assert choose_peel(s4).position == 4
    assert choose_peel(s4).anchors == (1,)


def test_peel_rejects_class_other():
    tri = build_generating_graph(3, [(1, 2), (2, 3), (1, 3)], allow_triangle=True)
    with pytest.raises(GeneratingGraphError):
        choose_peel(tri)


def test_remove_position_peels_down_the_family():
    tadpole = build_generating_graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
    smaller = remove_position(tadpole, choose_peel(tadpole).position)
    assert smaller.n == 4
    assert smaller.cls == CYCLE
    # peeling the cycle leaves the 3-path 1-2-3, which the classifier
    # reports as the star on three vertices (same graph, centered at 2)
    last = remove_position(smaller, choose_peel(smaller).position)
    assert last.n == 3
    assert last.cls == STAR
    assert last.edges == ((1, 2), (2, 3))


def test_remove_position_refuses_a_cut_position():
    tadpole = build_generating_graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
    with pytest.raises(GeneratingGraphError):
        remove_position(tadpole, 4)  # removing the attachment disconnects


def test_relabel_to_canonical_maps_edges_to_edges():
    g = build_generating_graph(5, [(2, 3), (3, 5), (5, 1), (1, 2), (1, 4)])
    canon, mapping = relabel_to_canonical(g)
    assert canon.cls == g.cls == UNICYCLIC_TF
    assert sorted(mapping) == [1, 2, 3, 4, 5]
    assert sorted(mapping.values()) == [1, 2, 3, 4, 5]
    relabeled = {tuple(sorted((mapping[a], mapping[b]))) for a, b in g.edges}
    assert relabeled == set(canon.edges)


def test_relabel_is_idempotent_on_canonical_input():
    g = build_generating_graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
    canon, mapping = relabel_to_canonical(g)
    assert canon.edges == g.edges
    assert all(mapping[k] == k for k in mapping)


def test_describe_is_one_line():
    g = build_generating_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    text = describe(g)
    assert "\n" not in text
    assert "Cycle" in text and "n=4" in text
