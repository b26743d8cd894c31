"""Closing a k-cycle from a path in the first or second neighbourhood of a vertex."""

from __future__ import annotations

from typing import Sequence

from .errors import ContractViolation, InvalidInputError
from .graph import Graph


def cycle_from_first_neighbourhood(g: Graph, v: int, path: Sequence[int]) -> list[int]:
    """``v`` followed by ``path``: a cycle on ``len(path) + 1`` vertices.

    Every path vertex must be a neighbour of ``v``.
    """
    path = list(path)
    if len(path) < 2:
        raise InvalidInputError("path must have at least 2 vertices")
    if v in path or not g.is_valid_path(path):
        raise InvalidInputError(f"{path} is not a path of the graph avoiding {v}")
    outside = [p for p in path if not g.has_edge(v, p)]
    if outside:
        raise InvalidInputError(f"vertices {outside} are not neighbours of {v}")
    cycle = [v] + path
    if not g.is_valid_cycle(cycle):
        raise ContractViolation(f"assembled cycle {cycle} is invalid")
    return cycle


def second_neighbourhood(g: Graph, v: int) -> int:
    """Bitmask of the vertices at distance exactly two from ``v``."""
    first = g.rows[v]
    out = 0
    w = first
    while w:
        low = w & -w
        out |= g.rows[low.bit_length() - 1]
        w ^= low
    return out & ~first & ~(1 << v)


def cycle_case_a_window(k: int, j: int) -> tuple[int, int]:
    """1-based indices of the first and last path vertex used when the hub
    neighbours ``u_j`` and ``u_{j+k-4}`` differ."""
    return j, j + k - 4


def cycle_from_second_neighbourhood(
    g: Graph, v: int, path: Sequence[int], *, return_case: bool = False
):
    """A ``k``-cycle from a path ``v_1 .. v_{2k}`` lying at distance two from ``v``.

    Each ``v_i`` is assigned ``u_i``, its lowest-index common neighbour with
    ``v``.  Three constructions are tried in order:

    (a) some ``j`` in ``1..k`` has ``u_j != u_{j+k-4}``:
        ``v u_j v_j .. v_{j+k-4} u_{j+k-4}``;
    (b) ``u_1 != u_2`` (or ``u_2 != u_3``):
        ``u_1 v_1 v_2 u_2 v_{k-2} .. v_{2k-7}`` (shifted by one for the latter);
    (c) ``u_1 = u_2 = u_3``, hence ``u_1 = u_{k-1}``: ``u_1 v_1 .. v_{k-1}``.

    With ``return_case=True`` returns ``(cycle, case)`` where ``case`` is one
    of ``"a"``, ``"b"``, ``"c"``.
    """
    path = list(path)
    if len(path) % 2:
        raise InvalidInputError("path must have an even number 2k of vertices")
    k = len(path) // 2
    if k < 5:
        raise InvalidInputError(f"need k >= 5, got {k}")
    if not g.is_valid_path(path):
        raise InvalidInputError(f"{path} is not a path of the graph")
    rows = g.rows
    hub_nbrs = rows[v]
    # u[i] for 1-based i; u[0] unused
    u = [-1]
    for p in path:
        if p == v or hub_nbrs >> p & 1:
            raise InvalidInputError(f"path vertex {p} is not in the second neighbourhood of {v}")
        common = hub_nbrs & rows[p]
        if not common:
            raise InvalidInputError(f"path vertex {p} has no common neighbour with {v}")
        u.append((common & -common).bit_length() - 1)
    vv = [-1] + path

    cycle: list[int]
    case: str
    for j in range(1, k + 1):
        first, last = cycle_case_a_window(k, j)
        if u[first] != u[last]:
            cycle = [v, u[first]] + vv[first:last + 1] + [u[last]]
            case = "a"
            break
    else:
        for a, b in ((1, k - 3), (k - 3, 2 * k - 7), (2, k - 2), (k - 2, 2 * k - 6), (3, k - 1), (k - 1, 2 * k - 5)):
            if u[a] != u[b]:
                raise ContractViolation(f"u_{a} != u_{b} although case (a) failed for every j")
        if u[1] != u[2]:
            cycle = [u[1], vv[1], vv[2], u[2]] + vv[k - 2:2 * k - 6]
            case = "b"
        elif u[2] != u[3]:
            cycle = [u[2], vv[2], vv[3], u[3]] + vv[k - 1:2 * k - 5]
            case = "b"
        else:
            cycle = [u[1]] + vv[1:k]
            case = "c"
    if len(cycle) != k or not g.is_valid_cycle(cycle):
        raise ContractViolation(f"case ({case}) produced an invalid cycle {cycle}")
    return (cycle, case) if return_case else cycle
