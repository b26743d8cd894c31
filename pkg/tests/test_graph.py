import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from ramseycert import (
    ColoredComplete,
    Graph,
    InvalidInputError,
    SizeLimitError,
    TargetGraph,
    chromatic_number,
    components,
    find_cycle,
    find_embedding,
    find_path,
)
from ramseycert.graph import color_classes, two_core

from helpers import brute_chromatic, brute_has_embedding, brute_has_path, edge_set, is_cycle_in


@st.composite
def graphs(draw, max_order=8, min_order=0):
    n = draw(st.integers(min_order, max_order))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def test_rejects_loops_and_out_of_range():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 3)])


def test_components_examples():
    assert components(Graph.empty(0)) == []
    assert sorted(map(len, components(Graph.matching(2)))) == [2, 2]
    assert [len(c) for c in components(Graph.path(5))] == [5]


def test_chromatic_examples():
    assert chromatic_number(Graph.empty(4)) == 1
    assert chromatic_number(Graph.cycle(5)) == 3
    assert chromatic_number(Graph.complete(4)) == 4
    assert chromatic_number(Graph.petersen()) == 3


def test_chromatic_size_limit():
    with pytest.raises(SizeLimitError):
        chromatic_number(Graph.cycle(41))


def test_find_path_examples():
    star = Graph.star(4)
    path = find_path(star, 3)
    assert path is not None and path[1] == 0 and star.is_valid_path(path)
    assert find_path(star, 4) is None
    c7 = Graph.cycle(7)
    path = find_path(c7, 7)
    assert path is not None and sorted(path) == list(range(7)) and c7.is_valid_path(path)


def test_find_embedding_examples():
    edge = Graph.complete(2)
    emb = find_embedding(edge, Graph.path(3))
    assert emb is not None and emb.is_valid(edge, Graph.path(3))
    assert find_embedding(Graph.complete(3), Graph.cycle(5)) is None
    petersen = Graph.petersen()
    emb = find_embedding(Graph.path(4), petersen)
    assert emb is not None
    es = edge_set(petersen)
    assert len(set(emb.map)) == 4
    assert all(frozenset((emb.map[i], emb.map[i + 1])) in es for i in range(3))


def test_petersen_has_no_short_cycles_but_has_c5():
    petersen = Graph.petersen()
    assert find_cycle(petersen, 3) is None
    assert find_cycle(petersen, 4) is None
    assert is_cycle_in(petersen, find_cycle(petersen, 5), 5)


def test_target_graph_fields():
    h = TargetGraph(Graph.cycle(5))
    assert (h.n, h.m, h.chi) == (5, 5, 3)
    with pytest.raises(InvalidInputError):
        TargetGraph(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(InvalidInputError):
        TargetGraph(Graph.empty(0))


def test_colored_complete_restrict_and_blue():
    rng = random.Random(3)
    red = Graph.from_edges(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if rng.random() < 0.5])
    c = ColoredComplete(red)
    for a in range(6):
        for b in range(6):
            if a != b:
                assert c.is_red(a, b) != c.is_blue(a, b)
    sub = c.restrict([4, 1, 5])
    assert sub.is_red(0, 1) == c.is_red(4, 1)
    assert sub.is_red(1, 2) == c.is_red(1, 5)


def test_two_core_strips_trees():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    assert two_core(g) == 0b111


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_components_partition_and_are_closed(g):
    comps = components(g)
    seen = [v for c in comps for v in c]
    assert sorted(seen) == list(range(g.order))
    where = {v: i for i, c in enumerate(comps) for v in c}
    for a, b in g.edges():
        assert where[a] == where[b]
    for c in comps:
        # connected: a walk from the first vertex reaches everything
        reached, stack = {c[0]}, [c[0]]
        while stack:
            x = stack.pop()
            for y in g.neighbours(x):
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
        assert reached == set(c)


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=8), st.integers(1, 8))
def test_find_path_matches_enumeration(g, k):
    found = find_path(g, k)
    if k > g.order:
        assert found is None
        return
    assert (found is not None) == brute_has_path(g, k)
    if found is not None:
        assert len(found) == k and g.is_valid_path(found)


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=5, min_order=1), graphs(max_order=8))
def test_find_embedding_matches_enumeration(p, h):
    found = find_embedding(p, h)
    if found is None:
        assert p.order > h.order or not brute_has_embedding(p, h)
    else:
        es = edge_set(h)
        assert len(set(found.map)) == p.order
        assert all(frozenset((found.map[a], found.map[b])) in es for a, b in p.edges())


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=7, min_order=1))
def test_chromatic_matches_enumeration(g):
    chi = chromatic_number(g)
    assert chi == brute_chromatic(g)
    classes = color_classes(g)
    assert len(classes) == chi
    es = edge_set(g)
    for cls in classes:
        assert not any(frozenset((a, b)) in es for a in cls for b in cls if a < b)


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=8), st.integers(3, 8))
def test_find_cycle_matches_enumeration(g, k):
    found = find_cycle(g, k)
    exists = any(is_cycle_in(g, s, k) for s in permutations(range(g.order), k)) if k <= g.order else False
    assert (found is not None) == exists
    if found is not None:
        assert is_cycle_in(g, found, k)
