"""Red path or blue multipartite graph: the path-versus-H Ramsey embedder.

The recursion merges the first two parts and pads them with ``k`` vertices,
solves the smaller instance, then splits the merged part again with the
two-part base case.  The base case is a complete search; the bipartite
path-Ramsey bound ``k + n1 + n2 - 2`` guarantees that it finds something.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence, Union

from .errors import ContractViolation, InvalidInputError, SizeLimitError
from .graph import ColoredComplete, Graph, TargetGraph, color_classes, find_path, iter_bits
from .witness import BlueCopy, BluePartite, RedPath


def ceil_sqrt(x: int) -> int:
    """Smallest integer ``c >= 0`` with ``c*c >= x``."""
    if x < 0:
        raise InvalidInputError("ceil_sqrt of a negative number")
    r = isqrt(x)
    return r if r * r == x else r + 1


def ceil_k_sqrt(k: int, x: int) -> int:
    """``ceil(k * sqrt(x))`` in exact arithmetic."""
    return ceil_sqrt(k * k * x)


def bound_chi(k: int, n: int, chi: int) -> int:
    """Order that forces a red ``P_k`` or a blue copy of any ``n``-vertex graph of
    chromatic number ``chi``."""
    if k < 1 or chi < 1:
        raise InvalidInputError("need k >= 1 and chi >= 1")
    return n + k * (chi - 1)


def bound_sqrt(k: int, n: int, m: int) -> int:
    """``n + ceil(k * sqrt(2m))``: the chromatic bound with chi eliminated."""
    if k < 1 or m < 1:
        raise InvalidInputError("need k >= 1 and m >= 1")
    return n + ceil_k_sqrt(k, 2 * m)


@dataclass(frozen=True)
class MultipartiteSpec:
    part_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "part_sizes", tuple(self.part_sizes))
        if not self.part_sizes or any(s < 1 for s in self.part_sizes):
            raise InvalidInputError(f"bad part sizes {self.part_sizes}")

    @property
    def t(self) -> int:
        return len(self.part_sizes)

    def stated_bound(self, k: int) -> int:
        """``k(t-1) + sum n_i``."""
        return k * (self.t - 1) + sum(self.part_sizes)

    def required_order(self, k: int) -> int:
        """Order the recursion actually consumes: two less than ``stated_bound``
        once there are at least two parts."""
        if self.t == 1:
            return self.part_sizes[0]
        return self.stated_bound(k) - 2


PathOrPartite = Union[RedPath, BluePartite]


def _blue_biclique(blue: Graph, a: int, b: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    small, large = (a, b) if a <= b else (b, a)
    rows = blue.rows
    chosen: list[int] = []

    def grow(start: int, common: int) -> Optional[tuple[int, ...]]:
        if len(chosen) == small:
            other = []
            for v in iter_bits(common):
                other.append(v)
                if len(other) == large:
                    return tuple(other)
            return None
        for v in range(start, blue.order):
            nxt = common & rows[v] & ~(1 << v)
            if nxt.bit_count() < large:
                continue
            chosen.append(v)
            found = grow(v + 1, nxt)
            if found is not None:
                return found
            chosen.pop()
        return None

    other = grow(0, blue.full_mask)
    if other is None:
        return None
    side = tuple(chosen)
    return (side, other) if a <= b else (other, side)


def base_bipartite(coloring: ColoredComplete, k: int, n1: int, n2: int) -> PathOrPartite:
    """A red ``P_k`` or two disjoint sets of sizes ``n1``, ``n2`` that are
    completely blue to each other.  Only the first ``k + n1 + n2 - 2`` vertices
    are searched."""
    if k < 1 or n1 < 1 or n2 < 1:
        raise InvalidInputError("need k, n1, n2 >= 1")
    need = max(k + n1 + n2 - 2, 1)
    if coloring.order < need:
        raise SizeLimitError(f"need at least {need} vertices, got {coloring.order}")
    sub = coloring.restrict(range(need)) if coloring.order > need else coloring
    path = find_path(sub.red, k)
    if path is not None:
        return RedPath(tuple(path))
    sides = _blue_biclique(sub.blue, n1, n2)
    if sides is None:
        raise ContractViolation(
            f"no red P_{k} and no blue K_{{{n1},{n2}}} on {need} vertices"
        )
    return BluePartite(sides)


def _solve(coloring: ColoredComplete, k: int, sizes: tuple[int, ...]) -> PathOrPartite:
    if len(sizes) == 1:
        return BluePartite((tuple(range(sizes[0])),))
    if len(sizes) == 2:
        return base_bipartite(coloring, k, sizes[0], sizes[1])
    merged = (sizes[0] + sizes[1] + k,) + sizes[2:]
    outer = _solve(coloring, k, merged)
    if isinstance(outer, RedPath):
        return outer
    big = outer.parts[0]
    inner = base_bipartite(coloring.restrict(big), k, sizes[0], sizes[1]).relabel(big)
    if isinstance(inner, RedPath):
        return inner
    return BluePartite(inner.parts + outer.parts[1:])


def red_path_or_blue_multipartite(
    coloring: ColoredComplete, k: int, spec: MultipartiteSpec
) -> PathOrPartite:
    """A red ``P_k``, or ``t`` disjoint sets of the given sizes with every
    cross pair blue."""
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    need = spec.required_order(k)
    if coloring.order < need:
        raise SizeLimitError(f"need at least {need} vertices, got {coloring.order}")
    sub = coloring.restrict(range(need)) if coloring.order > need else coloring
    result = _solve(sub, k, spec.part_sizes)
    if isinstance(result, RedPath):
        if len(result.vertices) != k or not coloring.red.is_valid_path(result.vertices):
            raise ContractViolation(f"invalid red path {result.vertices}")
    else:
        _check_partite(coloring, result, spec.part_sizes)
    return result


def _check_partite(coloring: ColoredComplete, result: BluePartite, sizes: Sequence[int]) -> None:
    seen: set[int] = set()
    for part, size in zip(result.parts, sizes):
        if len(part) != size or seen.intersection(part):
            raise ContractViolation(f"bad parts {result.parts}")
        seen.update(part)
    if len(result.parts) != len(sizes):
        raise ContractViolation(f"expected {len(sizes)} parts")
    red = coloring.red
    for i, p in enumerate(result.parts):
        for q in result.parts[i + 1:]:
            for x in p:
                if any(red.has_edge(x, y) for y in q):
                    raise ContractViolation("red pair across blue parts")


def red_path_or_blue_H(
    coloring: ColoredComplete, k: int, target: Union[TargetGraph, Graph]
) -> Union[RedPath, BlueCopy]:
    """A red ``P_k``, or a blue copy of ``target`` placed colour class by colour
    class into the parts of a blue complete multipartite graph.

    ``target`` may be a plain :class:`Graph`; isolated vertices are allowed
    there and are simply placed in some part.
    """
    g = target.graph if isinstance(target, TargetGraph) else target
    n = g.order
    if n == 0:
        return BlueCopy(())
    classes = color_classes(g)
    chi = len(classes)
    if coloring.order < bound_chi(k, n, chi):
        raise SizeLimitError(
            f"need at least {bound_chi(k, n, chi)} vertices, got {coloring.order}"
        )
    result = red_path_or_blue_multipartite(
        coloring, k, MultipartiteSpec(tuple(len(c) for c in classes))
    )
    if isinstance(result, RedPath):
        return result
    mapping = [0] * n
    for cls, part in zip(classes, result.parts):
        for v, x in zip(cls, part):
            mapping[v] = x
    return BlueCopy(tuple(mapping))
