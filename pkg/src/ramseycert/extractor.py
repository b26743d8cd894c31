"""Red ``C_k`` or blue ``H`` by induction on ``e(H)``.

The pipeline follows the inductive argument for ``R(C_k, H) <= 2e(H) + c_k``:

1. base case (few edges or small host): complete search;
2. disconnected ``H``: matching extractor, or embed one component and recurse
   on the rest of the host;
3. density window: outside ``m^{2/3} <= n <= (1 - (20k)^-2) m`` delegate to a
   budgeted complete search;
4. embed ``H - v`` for a minimum-degree ``v``, try to extend it directly, and
   otherwise pick a hub ``u`` among the images of ``N(v)`` with many red
   neighbours among the unused vertices;
5. red ``P_{k-1}`` in the hub's red neighbourhood ``U1`` closes a red ``C_k``;
   a large ``U1`` holds a blue ``H`` outright;
6. the same for a red ``P_{2k}`` in the second red neighbourhood;
7. split ``V(H) = V1 + V2``, put ``H[V1]`` in ``U1`` and recurse for ``H[V2]``
   in ``U2``; every ``U1``-``U2`` pair is blue.

The constants that make every step succeed are far too large to reach, so
with a desk-scale :class:`Config` the pipeline can give up and return
:class:`Exhausted`.  Every witness it does return is checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

from .cycles import cycle_from_first_neighbourhood, cycle_from_second_neighbourhood, second_neighbourhood
from .errors import ContractViolation, InvalidInputError, SizeLimitError
from .graph import ColoredComplete, Graph, TargetGraph, components, find_path, iter_bits, mask_of
from .matchingcase import matching_ramsey_number, matching_witness
from .oracle import brute_force_witness, check_witness
from .pathramsey import bound_sqrt, ceil_k_sqrt, ceil_sqrt, red_path_or_blue_H
from .witness import BlueCopy, Exhausted, RedCycle, RedPath, Witness


def proven_m0(k: int) -> int:
    return 2**63 * k**18


@dataclass(frozen=True)
class Config:
    """Pipeline constants.

    ``fallback_limit``: hosts of at most this order go straight to complete
    search.  ``guard_budget``: largest host order for which a fired guard may
    still fall back to complete search.  ``density_guards=False`` lets the
    induction run on targets outside the density window, which is useful for
    exercising stages 4-7 at desk scale.
    """

    k: int
    m0: int = 0
    B: int = 0
    fallback_limit: int = 10
    guard_budget: int = 16
    density_guards: bool = True
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 5 or self.k % 2 == 0:
            raise InvalidInputError(f"k must be odd and at least 5, got {self.k}")
        if self.m0 < 0 or self.B < 0 or self.fallback_limit < 0:
            raise InvalidInputError("constants must be non-negative")

    @classmethod
    def guaranteed(cls, k: int, **kwargs) -> "Config":
        m0 = proven_m0(k)
        return cls(k=k, m0=m0, B=(2 * m0) ** 3, **kwargs)

    @property
    def guaranteed_regime(self) -> bool:
        return self.k >= 7 and self.m0 >= proven_m0(self.k) and self.B == (2 * self.m0) ** 3


def ramsey_bound_target(cfg: Config, m: int) -> int:
    """``2m + max(B - ceil(sqrt(m)), floor(k/2))``."""
    if m < 1:
        raise InvalidInputError("m must be at least 1")
    return 2 * m + max(cfg.B - ceil_sqrt(m), cfg.k // 2)


@dataclass(frozen=True)
class PartitionResult:
    V1: tuple[int, ...]
    V2: tuple[int, ...]
    H2: Graph
    H2_vertices: tuple[int, ...]
    """``H2`` vertex ``i`` is ``H2_vertices[i]`` in ``H``."""

    inner_edges: int
    """``e(H[V2])``."""


def _inner_edges(rows: Sequence[int], vertices: int) -> int:
    return sum((rows[v] & vertices).bit_count() for v in iter_bits(vertices)) // 2


def partition_H(target: Union[TargetGraph, Graph], s: int, seed: int = 0) -> PartitionResult:
    """``V1`` of size ``s`` with ``e(H[V2]) <= m ((n - s)/n)^2``.

    Tries uniform ``s``-subsets, then greedy swaps from the best sample, then
    (when affordable) all subsets in order.  A uniform ``V2`` of size ``n - s``
    has ``m (n-s)(n-s-1) / (n(n-1))`` inside edges on average, so a valid
    partition always exists.
    """
    g = target.graph if isinstance(target, TargetGraph) else target
    n = g.order
    if not 0 <= s <= n:
        raise InvalidInputError(f"need 0 <= s <= {n}, got {s}")
    m = g.edge_count()
    rows = g.rows
    full = g.full_mask
    r = n - s

    def ok(inside: int) -> bool:
        return inside * n * n <= m * r * r

    rng = random.Random(seed)
    best_v1, best_inside = None, None
    for _ in range(64):
        v1 = mask_of(rng.sample(range(n), s))
        inside = _inner_edges(rows, full & ~v1)
        if best_inside is None or inside < best_inside:
            best_v1, best_inside = v1, inside
        if ok(inside):
            break
    v1, inside = best_v1, best_inside
    while not ok(inside):
        v2 = full & ~v1
        into = max(iter_bits(v2), key=lambda x: ((rows[x] & v2).bit_count(), -x))
        out = min(iter_bits(v1), key=lambda x: ((rows[x] & v1).bit_count(), x))
        cand = (v1 | 1 << into) & ~(1 << out)
        cand_inside = _inner_edges(rows, full & ~cand)
        if cand_inside >= inside:
            break
        v1, inside = cand, cand_inside
    if not ok(inside):
        if comb(n, s) <= 200_000:
            for chosen in combinations(range(n), s):
                cand = mask_of(chosen)
                if ok(_inner_edges(rows, full & ~cand)):
                    v1 = cand
                    break
            else:
                raise ContractViolation("no partition meets the averaging bound")
        else:
            while not ok(inside):
                v1 = mask_of(rng.sample(range(n), s))
                inside = _inner_edges(rows, full & ~v1)
    v2 = full & ~v1
    V2 = tuple(iter_bits(v2))
    h2, kept = g.induced(V2).without_isolated()
    result = PartitionResult(
        V1=tuple(iter_bits(v1)),
        V2=V2,
        H2=h2,
        H2_vertices=tuple(V2[i] for i in kept),
        inner_edges=_inner_edges(rows, v2),
    )
    if not ok(result.inner_edges):
        raise ContractViolation("partition violates the averaging bound")
    return result


@dataclass
class ExtractionState:
    """Snapshot of stages 4-7 for one level of the induction."""

    min_deg_vertex: int
    delta: int
    images: tuple[int, ...]
    uncovered: tuple[int, ...]
    hub: int
    red_nbhd: tuple[int, ...] = ()
    second_red_nbhd: tuple[int, ...] = ()
    rest: tuple[int, ...] = ()


def hub_ratio(state: ExtractionState, k: int, n: int, m: int) -> float:
    """``(|U1| - k sqrt(2m)) / n``; between 1/2 and 1 in the guaranteed regime."""
    return (len(state.red_nbhd) - k * (2 * m) ** 0.5) / n


@dataclass
class Trace:
    """Stage log of one extraction, in completion order (innermost first)."""

    events: list[tuple[int, str, str]] = field(default_factory=list)
    states: list[ExtractionState] = field(default_factory=list)
    result_stage: Optional[str] = None

    def log(self, depth: int, stage: str, detail: str = "") -> None:
        self.events.append((depth, stage, detail))


class _Extractor:
    def __init__(self, cfg: Config, trace: Trace) -> None:
        self.cfg = cfg
        self.k = cfg.k
        self.trace = trace
        self.rng = random.Random(cfg.seed)

    # helpers --------------------------------------------------------------

    def done(self, coloring: ColoredComplete, h: Graph, w: Witness, depth: int, stage: str) -> Witness:
        if not check_witness(coloring, self.k, h, w):
            raise ContractViolation(f"stage {stage} produced an invalid witness {w}")
        self.trace.log(depth, stage, type(w).__name__)
        if depth == 0:
            self.trace.result_stage = stage
        return w

    def give_up(self, depth: int, stage: str, reason: str) -> Exhausted:
        self.trace.log(depth, stage, "exhausted: " + reason)
        if depth == 0:
            self.trace.result_stage = stage
        return Exhausted(stage, reason)

    def fallback(self, coloring: ColoredComplete, h: Graph, depth: int, stage: str, why: str):
        if coloring.order > self.cfg.guard_budget:
            return self.give_up(
                depth, stage, f"{why}; order {coloring.order} exceeds guard budget {self.cfg.guard_budget}"
            )
        w = brute_force_witness(coloring, self.k, h, max_order=None)
        if w is None:
            return self.give_up(depth, stage, f"{why}; complete search found no witness")
        return self.done(coloring, h, w, depth, stage)

    # pipeline -------------------------------------------------------------

    def extract(self, coloring: ColoredComplete, h: Graph, depth: int = 0):
        cfg, k = self.cfg, self.k
        big_n, n, m = coloring.order, h.order, h.edge_count()
        if m == 0:
            raise InvalidInputError("target must have at least one edge")
        if h.isolated_vertices():
            raise InvalidInputError("target must not have isolated vertices")

        # (1) base case
        if m <= cfg.m0 or big_n <= cfg.fallback_limit:
            w = brute_force_witness(coloring, k, h, max_order=None)
            if w is None:
                return self.give_up(depth, "base", "complete search found no witness")
            return self.done(coloring, h, w, depth, "base")
        if big_n < n:
            return self.fallback(coloring, h, depth, "size", f"host order {big_n} < |H| = {n}")

        # (2) disconnected targets
        comps = components(h)
        if len(comps) > 1:
            if all(len(c) == 2 for c in comps):
                return self.matching_case(coloring, h, depth)
            return self.split_component(coloring, h, comps, depth)

        # (3) density window, exact: n^3 >= m^2 and 400k^2 n <= (400k^2 - 1) m
        if cfg.density_guards:
            if n**3 < m**2:
                return self.fallback(coloring, h, depth, "dense-guard", "n < m^(2/3)")
            eps = 400 * k * k
            if eps * n > (eps - 1) * m:
                return self.fallback(coloring, h, depth, "sparse-guard", "n > (1 - (20k)^-2) m")

        return self.induction(coloring, h, depth)

    def matching_case(self, coloring: ColoredComplete, h: Graph, depth: int):
        k, m = self.k, h.edge_count()
        if not (m >= k and coloring.order >= matching_ramsey_number(k, m)):
            return self.fallback(
                coloring, h, depth, "matching", "matching-case hypotheses (m >= k, N >= 2m + (k-1)/2) fail"
            )
        w = matching_witness(coloring, k, m)
        if isinstance(w, BlueCopy):
            image = [0] * h.order
            for i, (a, b) in enumerate(h.edges()):
                image[a], image[b] = w.map[2 * i], w.map[2 * i + 1]
            w = BlueCopy(tuple(image))
        return self.done(coloring, h, w, depth, "matching")

    def split_component(self, coloring: ColoredComplete, h: Graph, comps, depth: int):
        chosen = next(c for c in comps if len(c) > 2)
        chosen_set = set(chosen)
        rest = [v for v in range(h.order) if v not in chosen_set]
        h_c, h_rest = h.induced(chosen), h.induced(rest)
        self.trace.log(depth, "split", f"component of {h_c.edge_count()} edges")
        first = self.extract(coloring, h_c, depth + 1)
        if not isinstance(first, BlueCopy):
            if isinstance(first, RedCycle):
                return self.done(coloring, h, first, depth, "split")
            return first if depth else self.give_up(depth, first.stage, first.reason)
        used = set(first.map)
        remaining = [x for x in range(coloring.order) if x not in used]
        second = self.extract(coloring.restrict(remaining), h_rest, depth + 1)
        if isinstance(second, Exhausted):
            return second if depth else self.give_up(depth, second.stage, second.reason)
        second = second.relabel(remaining)
        if isinstance(second, RedCycle):
            return self.done(coloring, h, second, depth, "split")
        image = [0] * h.order
        for i, v in enumerate(chosen):
            image[v] = first.map[i]
        for i, v in enumerate(rest):
            image[v] = second.map[i]
        return self.done(coloring, h, BlueCopy(tuple(image)), depth, "split")

    def induction(self, coloring: ColoredComplete, h: Graph, depth: int):
        k = self.k
        big_n, n, m = coloring.order, h.order, h.edge_count()
        red = coloring.red
        rows = red.rows

        # (4) blue H - v, then direct extension or a hub
        degs = h.degrees()
        v = min(range(n), key=lambda x: (degs[x], x))
        delta = degs[v]
        others = [x for x in range(n) if x != v]
        h_minus = h.induced(others)
        core, kept = h_minus.without_isolated()
        image = [-1] * n
        if core.edge_count():
            sub = self.extract(coloring, core, depth + 1)
            if isinstance(sub, Exhausted):
                return sub if depth else self.give_up(depth, sub.stage, sub.reason)
            if isinstance(sub, RedCycle):
                return self.done(coloring, h, sub, depth, "min-degree")
            for i, x in enumerate(kept):
                image[others[x]] = sub.map[i]
        used = mask_of(x for x in image if x >= 0)
        free = iter_bits(coloring.red.full_mask & ~used)
        for x in range(n):
            if x != v and image[x] < 0:
                image[x] = next(free)
                used |= 1 << image[x]
        nbr_images = [image[x] for x in h.neighbours(v)]
        uncovered = [x for x in range(big_n) if not used >> x & 1]
        if len(uncovered) != big_n - n + 1:
            raise ContractViolation("|S| != N - n + 1")
        images_mask = mask_of(nbr_images)
        for x in uncovered:
            if not rows[x] & images_mask:
                image[v] = x
                return self.done(coloring, h, BlueCopy(tuple(image)), depth, "extension")
        uncovered_mask = mask_of(uncovered)
        hub = max(sorted(nbr_images), key=lambda u: ((rows[u] & uncovered_mask).bit_count(), -u))
        if (rows[hub] & uncovered_mask).bit_count() * delta < len(uncovered):
            raise ContractViolation("pigeonhole hub has fewer than (N - n + 1)/delta red neighbours")

        # (5) first red neighbourhood
        u1_mask = rows[hub]
        pi_mask = second_neighbourhood(red, hub)
        u2_mask = red.full_mask & ~(u1_mask | pi_mask | 1 << hub)
        U1, Pi, U2 = (tuple(iter_bits(x)) for x in (u1_mask, pi_mask, u2_mask))
        state = ExtractionState(v, delta, tuple(nbr_images), tuple(uncovered), hub, U1, Pi, U2)
        self.trace.states.append(state)
        for x in U1:
            if rows[x] & u2_mask:
                raise ContractViolation("red edge between U1 and U2")
        path = find_path(red.induced(U1), k - 1) if len(U1) >= k - 1 else None
        if path is not None:
            cyc = cycle_from_first_neighbourhood(red, hub, [U1[i] for i in path])
            return self.done(coloring, h, RedCycle(tuple(cyc)), depth, "first-neighbourhood")
        if len(U1) >= bound_sqrt(k, n, m):
            w = self.blue_inside(coloring, U1, k - 1, h)
            return self.done(coloring, h, w, depth, "first-neighbourhood")
        if not len(U1) < bound_sqrt(k, n, m):
            raise ContractViolation("stage 5 fell through with |U1| >= n + k sqrt(2m)")

        # (6) second red neighbourhood
        path = find_path(red.induced(Pi), 2 * k) if len(Pi) >= 2 * k else None
        if path is not None:
            cyc = cycle_from_second_neighbourhood(red, hub, [Pi[i] for i in path])
            return self.done(coloring, h, RedCycle(tuple(cyc)), depth, "second-neighbourhood")
        if len(Pi) >= bound_sqrt(2 * k, n, m):
            w = self.blue_inside(coloring, Pi, 2 * k, h)
            return self.done(coloring, h, w, depth, "second-neighbourhood")
        if not len(Pi) < bound_sqrt(2 * k, n, m):
            raise ContractViolation("stage 6 fell through with |Pi| >= n + 2k sqrt(2m)")

        # (7) split H across U1 and U2
        s = len(U1) - ceil_k_sqrt(k, 2 * m)
        if s < 0:
            return self.give_up(depth, "partition", f"|U1| = {len(U1)} < k sqrt(2m)")
        part = partition_H(h, s, seed=self.rng.randrange(2**32))
        if len(U2) < len(part.V2):
            return self.give_up(depth, "partition", f"|U2| = {len(U2)} < |V2| = {len(part.V2)}")
        h1 = h.induced(part.V1)
        first = self.blue_inside(coloring, U1, k - 1, h1) if part.V1 else BlueCopy(())
        image = [-1] * n
        for i, x in enumerate(part.V1):
            image[x] = first.map[i]
        sub_coloring = coloring.restrict(U2)
        taken = 0
        if part.H2.edge_count():
            second = self.extract(sub_coloring, part.H2, depth + 1)
            if isinstance(second, Exhausted):
                return second if depth else self.give_up(depth, second.stage, second.reason)
            second = second.relabel(U2)
            if isinstance(second, RedCycle):
                return self.done(coloring, h, second, depth, "partition")
            for i, x in enumerate(part.H2_vertices):
                image[x] = second.map[i]
            taken = mask_of(second.map)
        spare = (x for x in U2 if not taken >> x & 1)
        for x in part.V2:
            if image[x] < 0:
                image[x] = next(spare)
        return self.done(coloring, h, BlueCopy(tuple(image)), depth, "partition")

    def blue_inside(self, coloring: ColoredComplete, where: Sequence[int], path_len: int, h: Graph) -> BlueCopy:
        """Blue copy of ``h`` inside ``where``, which is known to have no red
        ``P_{path_len}``."""
        try:
            w = red_path_or_blue_H(coloring.restrict(where), path_len, h)
        except SizeLimitError as exc:
            raise ContractViolation(f"path-Ramsey bound not met: {exc}") from exc
        if isinstance(w, RedPath):
            raise ContractViolation(f"red P_{path_len} found where none exists")
        return w.relabel(where)


def extract_witness(
    coloring: ColoredComplete,
    cfg: Config,
    target: Union[TargetGraph, Graph],
    trace: Optional[Trace] = None,
) -> Union[Witness, Exhausted]:
    """A red ``C_k`` or a blue copy of ``target``, or :class:`Exhausted`.

    Guaranteed to find a witness when ``cfg.guaranteed_regime`` holds and the
    colouring has at least :func:`ramsey_bound_target` vertices; best effort
    otherwise.  Pass a :class:`Trace` to see which stage answered.
    """
    h = target.graph if isinstance(target, TargetGraph) else target
    trace = trace if trace is not None else Trace()
    return _Extractor(cfg, trace).extract(coloring, h)
