"""Ground truth: witness checking, complete witness search, and exhaustive
verification of ``R(C_k, H) <= N`` over every 2-colouring of ``K_N``.

Colourings of ``K_N`` are numbered ``0 .. 2**E - 1`` with ``E = N(N-1)/2``;
bit ``e`` of the index is set iff the ``e``-th pair in lexicographic order
``(0,1), (0,2), .., (N-2,N-1)`` is red.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Union

import numpy as np

from .errors import BudgetExceededError, InvalidInputError, RangeError
from .graph import ColoredComplete, Graph, TargetGraph, find_cycle, find_embedding
from .matching import maximum_matching
from .witness import BlueCopy, RedCycle, Witness

JOBS_ENV = "RAMSEYCERT_JOBS"
EXHAUSTIVE_EDGE_BUDGET = 24
BRUTE_FORCE_ORDER_LIMIT = 64
CHUNK = 1 << 20

Target = Union[TargetGraph, Graph]


def _graph(target: Target) -> Graph:
    return target.graph if isinstance(target, TargetGraph) else target


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def check_witness(coloring: ColoredComplete, k: int, target: Target, w: object) -> bool:
    """True iff ``w`` is a red ``C_k`` or a blue copy of ``target`` in ``coloring``."""
    n = coloring.order
    if isinstance(w, RedCycle):
        cyc = w.vertices
        if len(cyc) != k or k < 3 or len(set(cyc)) != k:
            return False
        if any(not (isinstance(v, int) and 0 <= v < n) for v in cyc):
            return False
        red = coloring.red
        return all(red.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
    if isinstance(w, BlueCopy):
        g = _graph(target)
        image = w.map
        if len(image) != g.order or len(set(image)) != len(image):
            return False
        if any(not (isinstance(v, int) and 0 <= v < n) for v in image):
            return False
        return all(coloring.is_blue(image[a], image[b]) for a, b in g.edges())
    return False


def _is_perfect_matching(g: Graph) -> bool:
    return g.order > 0 and all(d == 1 for d in g.degrees())


def brute_force_witness(
    coloring: ColoredComplete,
    k: int,
    target: Target,
    max_order: Optional[int] = BRUTE_FORCE_ORDER_LIMIT,
) -> Optional[Witness]:
    """Some witness if one exists, else ``None`` (complete search)."""
    n = coloring.order
    if max_order is not None and n > max_order:
        raise BudgetExceededError(f"order {n} exceeds brute-force limit {max_order}")
    g = _graph(target)
    red = coloring.red

    def cycle() -> Optional[Witness]:
        if k < 3:
            return None
        found = find_cycle(red, k)
        return RedCycle(tuple(found)) if found is not None else None

    def copy() -> Optional[Witness]:
        if _is_perfect_matching(g):
            edges = maximum_matching(coloring.blue)
            if len(edges) < g.order // 2:
                return None
            # relabel Graph.matching(m) order onto the target's own edges
            image = [0] * g.order
            for (a, b), (x, y) in zip(g.edges(), edges):
                image[a], image[b] = x, y
            return BlueCopy(tuple(image))
        emb = find_embedding(g, coloring.blue)
        return BlueCopy(emb.map) if emb is not None else None

    red_heavy = 4 * red.edge_count() >= n * (n - 1)
    for attempt in ((cycle, copy) if red_heavy else (copy, cycle)):
        w = attempt()
        if w is not None:
            return w
    return None


def naive_witness_exists(coloring: ColoredComplete, k: int, target: Target) -> bool:
    """Independent enumeration over all vertex sequences; only for tiny orders."""
    n = coloring.order
    if n > 8:
        raise BudgetExceededError("naive enumerator is limited to 8 vertices")
    if k >= 3:
        for seq in permutations(range(n), k):
            if all(coloring.is_red(seq[i], seq[(i + 1) % k]) for i in range(k)):
                return True
    g = _graph(target)
    edges = g.edges()
    for seq in permutations(range(n), g.order):
        if all(coloring.is_blue(seq[a], seq[b]) for a, b in edges):
            return True
    return False


# exhaustive verification --------------------------------------------------


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: e for e, pair in enumerate(combinations(range(n), 2))}


def coloring_from_index(n: int, index: int) -> ColoredComplete:
    red = [(a, b) for e, (a, b) in enumerate(combinations(range(n), 2)) if index >> e & 1]
    return ColoredComplete(Graph.from_edges(n, red))


def coloring_index(coloring: ColoredComplete) -> int:
    idx = pair_index(coloring.order)
    return sum(1 << idx[e] for e in coloring.red.edges())


def cycle_masks(n: int, k: int) -> list[int]:
    """Edge masks of all ``k``-cycles in ``K_n``."""
    if k < 3 or k > n:
        return []
    idx = pair_index(n)
    out = set()
    for subset in combinations(range(n), k):
        first, rest = subset[0], subset[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue
            cyc = (first,) + perm
            mask = 0
            for i in range(k):
                a, b = cyc[i], cyc[(i + 1) % k]
                mask |= 1 << idx[(a, b) if a < b else (b, a)]
            out.add(mask)
    return sorted(out)


def copy_masks(n: int, g: Graph) -> list[int]:
    """Edge masks of all copies of ``g`` in ``K_n``."""
    if g.order > n:
        return []
    idx = pair_index(n)
    edges = g.edges()
    out = set()
    for seq in permutations(range(n), g.order):
        mask = 0
        for a, b in edges:
            x, y = seq[a], seq[b]
            mask |= 1 << idx[(x, y) if x < y else (y, x)]
        out.add(mask)
    return sorted(out)


def _first_survivor(lo: int, hi: int, red_masks: list[int], blue_masks: list[int]) -> int:
    """Smallest colouring index in ``[lo, hi)`` with no red cycle mask inside its
    red set and no copy mask inside its blue set, or -1."""
    dtype = np.uint64
    for start in range(lo, hi, CHUNK):
        alive = np.arange(start, min(start + CHUNK, hi), dtype=dtype)
        for mask in red_masks:
            mk = dtype(mask)
            alive = alive[(alive & mk) != mk]
            if not alive.size:
                break
        else:
            for mask in blue_masks:
                alive = alive[(alive & dtype(mask)) != 0]
                if not alive.size:
                    break
        if alive.size:
            return int(alive.min())
    return -1


@dataclass(frozen=True)
class VerifyResult:
    verified: bool
    colourings: int
    counterexample: Optional[ColoredComplete]
    counterexample_index: Optional[int]


def exhaustive_verify(
    k: int,
    target: Target,
    n: int,
    jobs: Optional[int] = None,
    edge_budget: int = EXHAUSTIVE_EDGE_BUDGET,
) -> VerifyResult:
    """Whether every colouring of ``K_n`` has a red ``C_k`` or a blue ``target``.

    On failure the counterexample is the colouring of least index.
    """
    if n < 1:
        raise InvalidInputError("order must be positive")
    e = n * (n - 1) // 2
    if e > edge_budget:
        raise BudgetExceededError(f"K_{n} has {e} edges; budget is {edge_budget}")
    if e > 63:
        raise BudgetExceededError("more than 63 edges cannot be indexed in 64 bits")
    g = _graph(target)
    red_masks = cycle_masks(n, k)
    blue_masks = copy_masks(n, g)
    total = 1 << e
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or total < CHUNK:
        found = _first_survivor(0, total, red_masks, blue_masks)
    else:
        step = -(-total // jobs)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_first_survivor, lo, hi, red_masks, blue_masks)
                for lo, hi in bounds
            ]
            hits = [f.result() for f in futures]
        hits = [h for h in hits if h >= 0]
        found = min(hits) if hits else -1
    if found < 0:
        return VerifyResult(True, total, None, None)
    return VerifyResult(False, total, coloring_from_index(n, found), found)


@dataclass(frozen=True)
class RamseyResult:
    value: int
    counterexample: ColoredComplete


def ramsey_number_exact(
    k: int,
    target: Target,
    max_order: int,
    min_order: int = 1,
    jobs: Optional[int] = None,
) -> RamseyResult:
    """Least ``N`` in ``[min_order, max_order]`` with ``R(C_k, H) <= N``,
    together with a witness-free colouring of ``K_{N-1}``."""
    previous: Optional[VerifyResult] = None
    for n in range(min_order, max_order + 1):
        result = exhaustive_verify(k, target, n, jobs=jobs)
        if result.verified:
            if previous is None:
                if n == 1:
                    raise RangeError("every colouring of K_1 already has a witness")
                previous = exhaustive_verify(k, target, n - 1, jobs=jobs)
                if previous.verified:
                    raise RangeError(f"range starts above the Ramsey number (N={n - 1} verifies)")
            assert previous.counterexample is not None
            return RamseyResult(n, previous.counterexample)
        previous = result
    raise RangeError(f"no N <= {max_order} verifies")
