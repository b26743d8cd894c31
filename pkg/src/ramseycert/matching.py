"""Maximum matching (Edmonds' blossom algorithm) and Tutte-Berge certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .graph import Graph, component_masks, iter_bits, mask_of


@dataclass(frozen=True)
class MatchingCertificate:
    matching: tuple[tuple[int, int], ...]
    witness_set: tuple[int, ...]
    odd_components: int
    order: int

    @property
    def size(self) -> int:
        return len(self.matching)

    def tutte_berge_value(self) -> int:
        """``N - odd(G - S) + |S|``; twice the matching size when tight."""
        return self.order - self.odd_components + len(self.witness_set)


class _Blossom:
    """Mutable state of one run; ``mate[v] == -1`` means exposed."""

    def __init__(self, g: Graph) -> None:
        self.n = g.order
        self.rows = g.rows
        self._adj: list[list[int]] | None = None
        self.mate = [-1] * self.n
        self.size = 0

    @property
    def adj(self) -> list[list[int]]:
        if self._adj is None:
            self._adj = [list(iter_bits(row)) for row in self.rows]
        return self._adj

    def greedy(self) -> None:
        mate, rows = self.mate, self.rows
        free = (1 << self.n) - 1
        for v in range(self.n):
            if free >> v & 1:
                options = rows[v] & free
                if options:
                    w = (options & -options).bit_length() - 1
                    mate[v], mate[w] = w, v
                    free &= ~(1 << v | 1 << w)
                    self.size += 1

    def search(self, root: int) -> tuple[int, list[int], list[bool]]:
        """Grow an alternating tree from ``root``.

        Returns ``(end, parent, even)``: ``end`` is an exposed vertex closing an
        augmenting path (or -1), ``even`` marks outer vertices, blossoms
        included.
        """
        n, adj, mate = self.n, self.adj, self.mate
        even = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] < 0:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        even[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    b = lca(v, to)
                    in_blossom = [False] * n
                    mark(v, b, to, in_blossom)
                    mark(to, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not even[i]:
                                even[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        return to, parent, even
                    even[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent, even

    def augment(self, end: int, parent: list[int]) -> None:
        mate = self.mate
        v = end
        while v >= 0:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt

    def run(self) -> None:
        self.greedy()
        # a vertex with no augmenting path never gains one later
        for v in range(self.n):
            if 2 * self.size >= self.n - 1:
                return
            if self.mate[v] < 0:
                end, parent, _ = self.search(v)
                if end >= 0:
                    self.augment(end, parent)
                    self.size += 1

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, w) for v, w in enumerate(self.mate) if v < w)


def maximum_matching(g: Graph) -> tuple[tuple[int, int], ...]:
    """A maximum-cardinality matching as sorted ``(u, v)`` pairs with ``u < v``."""
    state = _Blossom(g)
    state.run()
    return state.edges()


def odd_components(g: Graph, removed: int) -> int:
    """Number of odd-order components of ``g`` minus the vertex mask ``removed``."""
    allowed = g.full_mask & ~removed
    return sum(1 for c in component_masks(g, allowed) if c.bit_count() & 1)


def tutte_berge_witness(g: Graph) -> MatchingCertificate:
    """Maximum matching plus a set S attaining the Tutte-Berge minimum.

    S is the Edmonds-Gallai set A(G): the neighbours of D(G), where D(G) is the
    set of vertices missed by some maximum matching, i.e. the outer vertices of
    the alternating tree grown from each exposed vertex.
    """
    state = _Blossom(g)
    state.run()
    missable = 0
    for v in range(g.order):
        if state.mate[v] < 0:
            end, _, even = state.search(v)
            if end >= 0:
                raise ContractViolation("augmenting path after maximum matching")
            missable |= mask_of(i for i, flag in enumerate(even) if flag)
    attached = 0
    for v in iter_bits(missable):
        attached |= g.rows[v]
    attached &= ~missable
    odd = odd_components(g, attached)
    cert = MatchingCertificate(
        matching=state.edges(),
        witness_set=tuple(iter_bits(attached)),
        odd_components=odd,
        order=g.order,
    )
    if cert.tutte_berge_value() != 2 * cert.size:
        raise ContractViolation(
            f"Tutte-Berge equality fails: {cert.tutte_berge_value()} != 2*{cert.size}"
        )
    return cert
