"""Red odd cycle versus blue matching: extremal colouring and extractor."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, InvalidInputError
from .graph import ColoredComplete, Graph, component_masks, iter_bits, mask_of
from .hamilton import hamiltonian_cycle_dirac
from .matching import MatchingCertificate, maximum_matching, tutte_berge_witness
from .witness import BlueCopy, RedCycle, Witness


def matching_ramsey_number(k: int, m: int) -> int:
    """``2m + floor((k-1)/2)``."""
    return 2 * m + (k - 1) // 2


@dataclass(frozen=True)
class PartiteSelection:
    """``k`` vertices drawn from distinct components of ``blue - S``.

    Vertices in different parts are never blue-adjacent, so the complete
    multipartite graph on the parts is red.
    """

    parts: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(len(p) for p in self.parts)

    def check(self, k: int) -> None:
        if self.total != k:
            raise ContractViolation(f"selected {self.total} vertices, wanted {k}")
        if len(self.parts) < (k + 1) // 2 + 1:
            raise ContractViolation(f"only {len(self.parts)} parts for k={k}")
        cap = (k - 1) // 2
        if any(len(p) > cap for p in self.parts):
            raise ContractViolation(f"a part exceeds {cap} vertices")


def _check_params(k: int, m: int) -> None:
    if not m >= k >= 3:
        raise InvalidInputError(f"need m >= k >= 3, got k={k}, m={m}")


def lower_bound_coloring(k: int, m: int) -> ColoredComplete:
    """K_{N-1} whose last ``2m-1`` vertices form a blue clique; every other edge is red.

    No red ``C_k``: the clique is independent in red, so a red cycle keeps at
    least half of its vertices outside it, and only ``floor((k-1)/2)`` are
    there.  No blue ``mK_2``: blue edges span ``2m-1`` vertices.
    """
    _check_params(k, m)
    order = matching_ramsey_number(k, m) - 1
    blue = Graph.empty(order - (2 * m - 1)).disjoint_union(Graph.complete(2 * m - 1))
    return ColoredComplete.from_blue(blue)


def matching_copy(edges) -> BlueCopy:
    """Blue copy of ``Graph.matching(len(edges))``: vertex ``2i`` and ``2i+1``
    go to the ends of ``edges[i]``."""
    out: list[int] = []
    for a, b in edges:
        out.extend((a, b))
    return BlueCopy(tuple(out))


def partite_selection(blue: Graph, cert: MatchingCertificate, k: int) -> PartiteSelection:
    """Round-robin ``k`` vertices across the components of ``blue - S``,
    largest components first, one vertex per component per sweep."""
    removed = mask_of(cert.witness_set)
    comps = [list(iter_bits(c)) for c in component_masks(blue, blue.full_mask & ~removed)]
    comps.sort(key=lambda c: (-len(c), c[0]))
    if len(comps) < (k + 1) // 2 + 1:
        raise ContractViolation(f"blue - S has only {len(comps)} components")
    if sum(len(c) for c in comps) < k:
        raise ContractViolation("blue - S has fewer than k vertices")
    parts: list[list[int]] = [[] for _ in comps]
    taken = 0
    depth = 0
    while taken < k:
        for i, comp in enumerate(comps):
            if depth < len(comp) and taken < k:
                parts[i].append(comp[depth])
                taken += 1
        depth += 1
    selection = PartiteSelection(tuple(tuple(p) for p in parts if p))
    selection.check(k)
    return selection


def red_cycle_from_selection(coloring: ColoredComplete, selection: PartiteSelection) -> RedCycle:
    vertices = [v for part in selection.parts for v in part]
    sizes = [len(p) for p in selection.parts]
    f = Graph.complete_multipartite(sizes)
    for a, b in f.edges():
        if not coloring.is_red(vertices[a], vertices[b]):
            raise ContractViolation(f"pair {vertices[a]},{vertices[b]} across parts is blue")
    return RedCycle(tuple(vertices[i] for i in hamiltonian_cycle_dirac(f)))


def matching_witness(coloring: ColoredComplete, k: int, m: int) -> Witness:
    """A red ``C_k`` or a blue ``mK_2`` in a colouring of order at least
    ``2m + floor((k-1)/2)``, for odd ``k`` and ``m >= k >= 3``.

    A blue copy maps vertex ``2i``/``2i+1`` of ``Graph.matching(m)`` onto the
    ``i``-th matching edge.
    """
    _check_params(k, m)
    if k % 2 == 0:
        raise InvalidInputError("k must be odd")
    n = coloring.order
    if n < matching_ramsey_number(k, m):
        raise InvalidInputError(
            f"order {n} is below 2m + floor((k-1)/2) = {matching_ramsey_number(k, m)}"
        )
    blue = coloring.blue
    edges = maximum_matching(blue)
    if len(edges) >= m:
        return matching_copy(edges[:m])
    cert = tutte_berge_witness(blue)
    s = len(cert.witness_set)
    if cert.size != len(edges):
        raise ContractViolation("two maximum matchings of different size")
    if 2 * s > n:
        raise ContractViolation(f"|S| = {s} exceeds N/2")
    if cert.odd_components < (k - 1) // 2 + 2 + s:
        raise ContractViolation(f"odd(G - S) = {cert.odd_components} is too small")
    if 2 * (n - s) < n or n - s < k:
        raise ContractViolation("G - S has too few vertices")
    selection = partite_selection(blue, cert, k)
    return red_cycle_from_selection(coloring, selection)
