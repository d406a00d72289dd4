from itertools import combinations

import pytest

from looprank.enumeration import (
    CONNECTED_GRAPH_COUNTS,
    connected_graphs,
    loop_orbit_representatives,
    self_loop_graphs,
    simple_graphs,
)
from looprank.graph import SelfLoopGraph, adjacency_matrix, contains_cycle, is_connected, is_triangle_free
from looprank.iso import canonical_form
from looprank.rank import minor_rank_oracle, rank
from looprank.verify import classify_rank3

# all graphs / triangle-free graphs on n vertices
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
TRIANGLE_FREE_COUNTS = {1: 1, 2: 2, 3: 3, 4: 7, 5: 14, 6: 38, 7: 107}


def labelled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SelfLoopGraph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    assert len(connected_graphs(n)) == CONNECTED_GRAPH_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_all_and_triangle_free_counts(n):
    assert len(simple_graphs(n)) == GRAPH_COUNTS[n]
    assert len(simple_graphs(n, triangle_free=True)) == TRIANGLE_FREE_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_against_labelled_enumeration(n):
    brute = {canonical_form(g) for g in labelled_graphs(n)}
    assert brute == {canonical_form(g) for g in simple_graphs(n)}
    brute_tf = {canonical_form(g) for g in labelled_graphs(n) if is_triangle_free(g)}
    assert brute_tf == {canonical_form(g) for g in simple_graphs(n, triangle_free=True)}


def test_loop_orbits_cover_each_class_once():
    for n in range(1, 6):
        for g in connected_graphs(n):
            reps = loop_orbit_representatives(g)
            forms = [canonical_form(SelfLoopGraph(n, g.edges, [v for v in range(n) if m >> v & 1])) for m in reps]
            assert len(forms) == len(set(forms))
            everything = {
                canonical_form(SelfLoopGraph(n, g.edges, [v for v in range(n) if m >> v & 1]))
                for m in range(1 << n)
            }
            assert set(forms) == everything


def test_self_loop_graph_counts_small():
    # connected self-loop graphs on 1, 2, 3 vertices, counted by hand:
    # n=1: K1, looped K1; n=2: K2 with 0/1/2 loops; n=3: P3 (6 loop classes) + K3 (4)
    assert [sum(1 for _ in self_loop_graphs(n)) for n in (1, 2, 3)] == [2, 3, 10]


def brute_rank3_forms(order, exact_oracle):
    """Independent classification: every labelled graph and loop set, no symmetry reduction."""
    out = set()
    for g in labelled_graphs(order):
        if not (is_connected(g) and is_triangle_free(g) and contains_cycle(g)):
            continue
        for mask in range(1 << order):
            h = SelfLoopGraph(order, g.edges, [v for v in range(order) if mask >> v & 1])
            a = adjacency_matrix(h)
            r = minor_rank_oracle(a) if exact_oracle else rank(a)
            if r == 3:
                out.add(canonical_form(h).hex())
    return out


@pytest.mark.parametrize("order, exact_oracle", [(4, True), (5, True), (6, False)])
def test_classify_matches_brute_force(order, exact_oracle):
    _, survivors = classify_rank3(order)
    assert {s.form for s in survivors} == brute_rank3_forms(order, exact_oracle)


def test_order_4_two_classes():
    _, survivors = classify_rank3(4)
    assert len(survivors) == 2
    loops = sorted(s.sigma for s in survivors)
    assert loops == [1, 2]
