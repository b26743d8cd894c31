import random

import pytest

from ramseycert import ContractViolation, Graph, InvalidInputError
from ramseycert import cycle_from_first_neighbourhood, cycle_from_second_neighbourhood
from ramseycert.cycles import cycle_case_a_window, second_neighbourhood
from ramseycert.graph import iter_bits

from helpers import is_cycle_in


def hub_instance(labels, extra_edges=(), extra_vertices=0):
    """Hub 0, one hub neighbour per distinct label, then path v_1..v_{2k}.

    ``labels[i]`` names the hub neighbour joined to ``v_{i+1}``; label ``a``
    becomes vertex ``1 + a`` once labels are renumbered in order of first use.
    """
    names = {}
    for x in labels:
        names.setdefault(x, len(names))
    hubs = len(names)
    first = 1 + hubs
    path = [first + i for i in range(len(labels))]
    order = first + len(labels) + extra_vertices
    edges = [(0, 1 + h) for h in range(hubs)]
    edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    edges += [(path[i], 1 + names[x]) for i, x in enumerate(labels)]
    edges += list(extra_edges)
    return Graph.from_edges(order, edges), path


def set_partitions(n):
    """Restricted growth strings of length ``n``."""

    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in range(top + 2):
            yield from grow(prefix + [x], max(top, x))

    yield from grow([0], 0)


# first neighbourhood ------------------------------------------------------


def test_wheel():
    rim = [(i, i % 5 + 1) for i in range(1, 6)]
    wheel = Graph.from_edges(6, rim + [(0, i) for i in range(1, 6)])
    cycle = cycle_from_first_neighbourhood(wheel, 0, [1, 2, 3, 4, 5])
    assert cycle == [0, 1, 2, 3, 4, 5]
    assert is_cycle_in(wheel, cycle, 6)


def test_triangle():
    g = Graph.complete(3)
    assert is_cycle_in(g, cycle_from_first_neighbourhood(g, 2, [0, 1]), 3)


def test_first_neighbourhood_rejects_bad_paths():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    with pytest.raises(InvalidInputError):
        cycle_from_first_neighbourhood(g, 0, [1, 2, 3])
    with pytest.raises(InvalidInputError):
        cycle_from_first_neighbourhood(g, 0, [1, 3])


def test_first_neighbourhood_planted():
    rng = random.Random(8)
    for _ in range(300):
        k = rng.randint(3, 9)
        n = rng.randint(k + 1, 20)
        perm = rng.sample(range(n), n)
        v, path = perm[0], perm[1:k]
        edges = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
        edges |= {(min(v, p), max(v, p)) for p in path}
        edges |= {(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.2}
        g = Graph.from_edges(n, sorted(edges))
        assert is_cycle_in(g, cycle_from_first_neighbourhood(g, v, path), k)


# second neighbourhood -----------------------------------------------------


def test_second_neighbourhood_mask():
    g = Graph.path(5)
    assert list(iter_bits(second_neighbourhood(g, 0))) == [2]
    assert list(iter_bits(second_neighbourhood(g, 2))) == [0, 4]


@pytest.mark.parametrize("k", range(5, 12))
def test_case_a_window_length(k):
    for j in range(1, k + 1):
        first, last = cycle_case_a_window(k, j)
        assert 1 <= first and last <= 2 * k
        # v, u_j, v_j .. v_{j+k-4}, u_{j+k-4}
        assert 1 + 1 + (last - first + 1) + 1 == k


@pytest.mark.parametrize("k", range(5, 12))
def test_case_a_fires_at_every_window(k):
    for j in range(1, k + 1):
        labels = ["A"] * (2 * k)
        labels[j + k - 4 - 1] = "B"
        g, path = hub_instance(labels)
        cycle, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
        assert case == "a"
        assert is_cycle_in(g, cycle, k)
        assert cycle[0] == 0 and cycle[2] == path[j - 1]


def test_case_a_distinct_private_neighbours():
    g, path = hub_instance(list(range(10)))
    cycle, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
    assert case == "a"
    u1, u2 = 1, 2
    assert cycle == [0, u1, path[0], path[1], u2]


@pytest.mark.parametrize("k", [5, 7, 9])
def test_case_c_single_common_neighbour(k):
    g, path = hub_instance(["u"] * (2 * k))
    cycle, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
    assert case == "c"
    assert cycle == [1] + path[: k - 1]
    assert is_cycle_in(g, cycle, k)


@pytest.mark.parametrize("k", [7, 9])
def test_case_b_periodic_neighbours(k):
    period = k - 4
    for shift in (0, 1):
        # u_1 != u_2 (shift 0) or u_1 = u_2 != u_3 (shift 1)
        base = list(range(period))
        if shift:
            base = [0, 0] + list(range(1, period - 1))
        labels = [base[i % period] for i in range(2 * k)]
        g, path = hub_instance(labels)
        cycle, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
        assert case == "b"
        assert is_cycle_in(g, cycle, k)


def test_case_b_three_hub_neighbours_k7():
    g, path = hub_instance([("x", "y", "z")[i % 3] for i in range(14)])
    cycle, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
    assert case == "b"
    assert len({c for c in cycle if 1 <= c <= 3}) == 2
    assert is_cycle_in(g, cycle, 7)


def test_case_b_cannot_occur_for_k5():
    # k - 4 = 1: case (a) failing everywhere forces u_1 = .. = u_6
    seen = set()
    for pattern in set_partitions(6):
        g, path = hub_instance(list(pattern) + [pattern[-1]] * 4)
        _, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
        seen.add(case)
    assert seen == {"a", "c"}


@pytest.mark.parametrize("k", [5, 7, 9])
def test_planted_second_neighbourhood(k):
    rng = random.Random(k)
    cases = set()
    for _ in range(1000):
        cycle, case, g = planted_run(rng, k)
        assert is_cycle_in(g, cycle, k)
        cases.add(case)
    assert {"a", "c"} <= cases


def planted_run(rng: random.Random, k: int):
    labels = random_labels(rng, k)
    extra = rng.randint(0, 6)
    g, path = hub_instance(labels, extra_vertices=extra)
    n = g.order
    hubs = {x for x in range(1, n) if g.has_edge(0, x)}
    edges = set(g.edges())
    for a in range(1, n):
        for b in range(a + 1, n):
            if rng.random() < 0.08:
                edges.add((a, b))
    # extra vertices may join the hub; path vertices never may
    for x in range(n - extra, n):
        if rng.random() < 0.5:
            edges.add((0, x))
    g = Graph.from_edges(n, sorted(edges))
    assert not any(g.has_edge(0, p) for p in path)
    assert all(g.rows[p] & g.rows[0] for p in path) and hubs
    cycle, case = cycle_from_second_neighbourhood(g, 0, path, return_case=True)
    return cycle, case, g


def random_labels(rng: random.Random, k: int):
    kind = rng.random()
    if kind < 0.3:
        return [rng.randrange(4) for _ in range(2 * k)]
    if kind < 0.6:
        period = k - 4
        pool = rng.randint(1, period)
        base = [rng.randrange(pool) for _ in range(period)]
        return [base[i % period] for i in range(2 * k)]
    return [0] * (2 * k)


def test_second_neighbourhood_rejects_bad_input():
    g, path = hub_instance(["u"] * 8)
    with pytest.raises(InvalidInputError):
        cycle_from_second_neighbourhood(g, 0, path)
    g, path = hub_instance(["u"] * 10)
    with pytest.raises(InvalidInputError):
        cycle_from_second_neighbourhood(g, 0, path[:-1] + [path[0]])
    bad = Graph.from_edges(g.order, g.edges() + [(0, path[3])])
    with pytest.raises(InvalidInputError):
        cycle_from_second_neighbourhood(bad, 0, path)


def test_contract_error_type_is_assertion():
    assert issubclass(ContractViolation, AssertionError)
