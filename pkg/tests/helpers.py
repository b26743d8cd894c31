"""Independent reference implementations used as oracles in the tests.

Everything here works on plain edge lists and Python sets, and shares no code
with the package beyond constructing inputs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from ramseycert import ColoredComplete, Graph


def edge_set(g: Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_coloring(rng: random.Random, n: int, p_red: float = 0.5) -> ColoredComplete:
    return ColoredComplete(random_graph(rng, n, p_red))


def brute_max_matching(n: int, edges: list[tuple[int, int]]) -> int:
    best = 0

    def grow(start: int, used: set[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        for i in range(start, len(edges)):
            a, b = edges[i]
            if a not in used and b not in used:
                grow(i + 1, used | {a, b}, size + 1)

    grow(0, set(), 0)
    return best


def brute_odd_components(n: int, edges: list[tuple[int, int]], removed: set[int]) -> int:
    adj = {v: set() for v in range(n) if v not in removed}
    for a, b in edges:
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    seen: set[int] = set()
    odd = 0
    for v in adj:
        if v in seen:
            continue
        stack, size = [v], 0
        seen.add(v)
        while stack:
            x = stack.pop()
            size += 1
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        odd += size % 2
    return odd


def brute_has_path(g: Graph, k: int) -> bool:
    es = edge_set(g)
    return any(
        all(frozenset((s[i], s[i + 1])) in es for i in range(k - 1))
        for s in permutations(range(g.order), k)
    )


def brute_has_embedding(pattern: Graph, host: Graph) -> bool:
    es = edge_set(host)
    pe = pattern.edges()
    return any(
        all(frozenset((s[a], s[b])) in es for a, b in pe)
        for s in permutations(range(host.order), pattern.order)
    )


def brute_chromatic(g: Graph) -> int:
    if g.order == 0:
        return 0
    es = g.edges()
    for c in range(1, g.order + 1):
        for colours in product(range(c), repeat=g.order):
            if all(colours[a] != colours[b] for a, b in es):
                return c
    raise AssertionError("unreachable")


def is_cycle_in(g: Graph, cycle, k: int) -> bool:
    es = edge_set(g)
    return (
        len(cycle) == k
        and len(set(cycle)) == k
        and all(frozenset((cycle[i], cycle[(i + 1) % k])) in es for i in range(k))
    )


def is_path_in(g: Graph, path, k: int) -> bool:
    es = edge_set(g)
    return (
        len(path) == k
        and len(set(path)) == k
        and all(frozenset((path[i], path[i + 1])) in es for i in range(k - 1))
    )


def uniform_coloring(rng: random.Random, n: int) -> ColoredComplete:
    """Each pair red with probability 1/2, drawn one bit-row at a time."""
    rows = [0] * n
    for i in range(n - 1):
        bits = rng.getrandbits(n - i - 1) << (i + 1)
        rows[i] |= bits
        while bits:
            low = bits & -bits
            rows[low.bit_length() - 1] |= 1 << i
            bits ^= low
    return ColoredComplete(Graph(n, rows, check=False))
