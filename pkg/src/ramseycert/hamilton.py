"""Constructive Dirac theorem: a Hamiltonian cycle when min degree >= n/2."""

from __future__ import annotations

from .errors import ContractViolation, DegreeConditionError
from .graph import Graph


def _extend(rows, path: list[int], on: int) -> int:
    while True:
        free = rows[path[-1]] & ~on
        if not free:
            return on
        nxt = (free & -free).bit_length() - 1
        path.append(nxt)
        on |= 1 << nxt


def _close(rows, path: list[int]) -> list[int]:
    first, last = path[0], path[-1]
    if rows[first] >> last & 1:
        return path
    for i in range(len(path) - 1):
        if rows[first] >> path[i + 1] & 1 and rows[last] >> path[i] & 1:
            return path[: i + 1] + path[:i:-1]
    raise ContractViolation("no rotation closes a maximal path under Dirac's condition")


def hamiltonian_cycle_dirac(g: Graph) -> list[int]:
    """Hamiltonian cycle of ``g`` by rotation-extension.

    Raises DegreeConditionError unless ``|g| >= 3`` and every degree is at
    least ``|g|/2``; no search is attempted below that threshold.
    """
    n = g.order
    if n < 3:
        raise DegreeConditionError(f"need at least 3 vertices, got {n}")
    if 2 * g.min_degree() < n:
        raise DegreeConditionError(
            f"minimum degree {g.min_degree()} is below {n}/2"
        )
    rows = g.rows
    path = [0]
    on = 1
    while True:
        on = _extend(rows, path, on)
        path.reverse()
        on = _extend(rows, path, on)
        cycle = _close(rows, path)
        if len(cycle) == n:
            return cycle
        for idx, c in enumerate(cycle):
            outside = rows[c] & ~on
            if outside:
                w = (outside & -outside).bit_length() - 1
                path = [w] + cycle[idx:] + cycle[:idx]
                on |= 1 << w
                break
        else:
            raise ContractViolation("Dirac graph is disconnected")
