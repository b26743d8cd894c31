"""Bit-row graphs and the exact searches everything else is built on.

A :class:`Graph` on vertices ``0..n-1`` stores one Python ``int`` per vertex;
bit ``j`` of ``rows[i]`` is set iff ``ij`` is an edge.  Neighbourhood
intersection is a single ``&``.  All searches are complete (they answer
"absent" only when nothing exists) and scan vertices lowest-index first, so
outputs are deterministic for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidInputError, SizeLimitError

CHROMATIC_LIMIT = 32


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Undirected simple graph with bit-row adjacency.  Immutable."""

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int], *, check: bool = True) -> None:
        if order < 0:
            raise InvalidInputError("order must be non-negative")
        if len(rows) != order:
            raise InvalidInputError(f"expected {order} rows, got {len(rows)}")
        rows = tuple(rows)
        if check:
            full = (1 << order) - 1
            for v, row in enumerate(rows):
                if row & ~full:
                    raise InvalidInputError(f"row {v} references a vertex >= {order}")
                if row >> v & 1:
                    raise InvalidInputError(f"self-loop at vertex {v}")
                for w in iter_bits(row):
                    if not rows[w] >> v & 1:
                        raise InvalidInputError(f"adjacency not symmetric at {v},{w}")
        self.order = order
        self.rows = rows
        self._hash: Optional[int] = None

    # construction ---------------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidInputError(f"edge {u}-{v} out of range for order {order}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows, check=False)

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, [0] * order, check=False)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        full = (1 << order) - 1
        return cls(order, [full ^ (1 << v) for v in range(order)], check=False)

    @classmethod
    def path(cls, order: int) -> "Graph":
        return cls.from_edges(order, [(i, i + 1) for i in range(order - 1)])

    @classmethod
    def cycle(cls, order: int) -> "Graph":
        if order < 3:
            raise InvalidInputError("a cycle needs at least 3 vertices")
        return cls.from_edges(order, [(i, (i + 1) % order) for i in range(order)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def matching(cls, m: int) -> "Graph":
        return cls.from_edges(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])

    @classmethod
    def complete_multipartite(cls, sizes: Sequence[int]) -> "Graph":
        part = []
        for index, size in enumerate(sizes):
            part.extend([index] * size)
        n = len(part)
        return cls.from_edges(
            n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
        )

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.order
        return Graph(
            self.order + other.order,
            list(self.rows) + [row << shift for row in other.rows],
            check=False,
        )

    # queries --------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.order else 0

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(
            self.order,
            [full & ~row & ~(1 << v) for v, row in enumerate(self.rows)],
            check=False,
        )

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``; new vertex ``i`` is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InvalidInputError("induced(): repeated vertex")
        rows = []
        for v in vertices:
            row = 0
            for w in iter_bits(self.rows[v]):
                i = index.get(w)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(vertices), rows, check=False)

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.rows) if not row]

    def without_isolated(self) -> tuple["Graph", list[int]]:
        """Drop isolated vertices; also return the kept vertices (old labels)."""
        keep = [v for v, row in enumerate(self.rows) if row]
        return self.induced(keep), keep

    def is_valid_path(self, vertices: Sequence[int]) -> bool:
        if len(set(vertices)) != len(vertices):
            return False
        if any(not 0 <= v < self.order for v in vertices):
            return False
        return all(self.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))

    def is_valid_cycle(self, vertices: Sequence[int]) -> bool:
        return (
            len(vertices) >= 3
            and self.is_valid_path(vertices)
            and self.has_edge(vertices[-1], vertices[0])
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


@dataclass(frozen=True)
class TargetGraph:
    """A target graph H with its cached invariants.  No isolated vertices."""

    graph: Graph
    n: int = field(init=False)
    m: int = field(init=False)
    chi: int = field(init=False)
    avg_degree: Fraction = field(init=False)

    def __post_init__(self) -> None:
        g = self.graph
        if g.order == 0:
            raise InvalidInputError("target graph must have at least one vertex")
        isolated = g.isolated_vertices()
        if isolated:
            raise InvalidInputError(f"target graph has isolated vertices {isolated}")
        m = g.edge_count()
        chi = chromatic_number(g)
        assert m >= chi * (chi - 1) // 2
        object.__setattr__(self, "n", g.order)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "avg_degree", Fraction(2 * m, g.order))


class ColoredComplete:
    """Red-blue colouring of K_N.  Red is stored; blue is its complement."""

    __slots__ = ("order", "red", "_blue")

    def __init__(self, red: Graph) -> None:
        self.order = red.order
        self.red = red
        self._blue: Optional[Graph] = None

    @property
    def blue(self) -> Graph:
        if self._blue is None:
            self._blue = self.red.complement()
        return self._blue

    @classmethod
    def all_red(cls, order: int) -> "ColoredComplete":
        return cls(Graph.complete(order))

    @classmethod
    def all_blue(cls, order: int) -> "ColoredComplete":
        return cls(Graph.empty(order))

    @classmethod
    def from_blue(cls, blue: Graph) -> "ColoredComplete":
        out = cls(blue.complement())
        out._blue = blue
        return out

    def is_red(self, u: int, v: int) -> bool:
        return self.red.has_edge(u, v)

    def is_blue(self, u: int, v: int) -> bool:
        return u != v and not self.red.has_edge(u, v)

    def restrict(self, vertices: Sequence[int]) -> "ColoredComplete":
        """Colouring induced on ``vertices``; new vertex ``i`` is ``vertices[i]``."""
        return ColoredComplete(self.red.induced(vertices))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ColoredComplete) and self.red == other.red

    def __hash__(self) -> int:
        return hash(self.red)

    def __repr__(self) -> str:
        return f"ColoredComplete(order={self.order}, red={self.red.edges()})"


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertex ``i`` to host vertex ``map[i]``."""

    map: tuple[int, ...]

    def is_valid(self, pattern: Graph, host: Graph) -> bool:
        if len(self.map) != pattern.order or len(set(self.map)) != len(self.map):
            return False
        if any(not 0 <= x < host.order for x in self.map):
            return False
        return all(host.has_edge(self.map[u], self.map[v]) for u, v in pattern.edges())


# connectivity -------------------------------------------------------------


def reach(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph, allowed: Optional[int] = None) -> list[int]:
    remaining = g.full_mask if allowed is None else allowed
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reach(g.rows, start, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    return [list(iter_bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or reach(g.rows, 0, g.full_mask) == g.full_mask


# colouring ----------------------------------------------------------------


def _two_coloring(g: Graph) -> Optional[list[int]]:
    colour = [-1] * g.order
    for start in range(g.order):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.rows[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def optimal_coloring(g: Graph, limit: int = CHROMATIC_LIMIT) -> list[int]:
    """An optimal proper colouring ``colour[v]`` using colours ``0..chi-1``.

    Iterative c-colourability by backtracking with a saturation-first vertex
    choice and symmetry breaking on fresh colours.
    """
    n = g.order
    if n == 0:
        raise InvalidInputError("chromatic number of the null graph is undefined")
    rows = g.rows
    if g.edge_count() == 0:
        return [0] * n
    two = _two_coloring(g)
    if two is not None:
        return two
    if n > limit:
        raise SizeLimitError(f"exact colouring limited to {limit} vertices, got {n}")

    def attempt(c: int) -> Optional[list[int]]:
        colour = [-1] * n
        # forbidden[v]: bitmask of colours used by neighbours of v
        forbidden = [0] * n

        def pick() -> int:
            best, key = -1, None
            for v in range(n):
                if colour[v] < 0:
                    k = (forbidden[v].bit_count(), rows[v].bit_count())
                    if key is None or k > key:
                        best, key = v, k
            return best

        def solve(placed: int, used: int) -> bool:
            if placed == n:
                return True
            v = pick()
            options = ~forbidden[v] & ((1 << min(used + 1, c)) - 1)
            for col in iter_bits(options):
                colour[v] = col
                touched = []
                for w in iter_bits(rows[v]):
                    if colour[w] < 0 and not forbidden[w] >> col & 1:
                        forbidden[w] |= 1 << col
                        touched.append(w)
                if solve(placed + 1, max(used, col + 1)):
                    return True
                for w in touched:
                    forbidden[w] &= ~(1 << col)
                colour[v] = -1
            return False

        return colour if solve(0, 0) else None

    for c in range(3, n + 1):
        found = attempt(c)
        if found is not None:
            return found
    raise AssertionError("unreachable: n colours always suffice")


def chromatic_number(g: Graph, limit: int = CHROMATIC_LIMIT) -> int:
    return max(optimal_coloring(g, limit)) + 1


def color_classes(g: Graph, limit: int = CHROMATIC_LIMIT) -> list[list[int]]:
    colour = optimal_coloring(g, limit)
    classes: list[list[int]] = [[] for _ in range(max(colour) + 1)]
    for v, c in enumerate(colour):
        classes[c].append(v)
    return classes


# paths and cycles ---------------------------------------------------------


def find_path(g: Graph, k: int) -> Optional[list[int]]:
    """A path on exactly ``k`` vertices, or ``None`` if ``g`` has none."""
    if k < 1:
        raise InvalidInputError("path length must be at least 1 vertex")
    if k > g.order:
        return None
    if k == 1:
        return [0]
    rows = g.rows
    allowed = 0
    for comp in component_masks(g):
        if comp.bit_count() >= k:
            allowed |= comp
    path: list[int] = []

    def extend(last: int, visited: int) -> bool:
        if len(path) == k:
            return True
        need = k - len(path)
        free = allowed & ~visited
        for nxt in iter_bits(rows[last] & free):
            if need > 2 and reach(rows, nxt, free).bit_count() < need:
                continue
            path.append(nxt)
            if extend(nxt, visited | 1 << nxt):
                return True
            path.pop()
        return False

    for start in iter_bits(allowed):
        path.append(start)
        if extend(start, 1 << start):
            return path
        path.pop()
    return None


def two_core(g: Graph) -> int:
    """Bitmask of the 2-core (vertices surviving repeated removal of degree < 2)."""
    alive = g.full_mask
    rows = g.rows
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (rows[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def find_cycle(g: Graph, k: int) -> Optional[list[int]]:
    """A cycle on exactly ``k`` vertices (``k >= 3``), or ``None``.

    The returned cycle starts at its smallest vertex, and its second vertex
    is smaller than its last.
    """
    if k < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    if k > g.order:
        return None
    rows = g.rows
    core = two_core(g)
    path: list[int] = []

    def extend(start: int, last: int, visited: int, allowed: int) -> bool:
        if len(path) == k:
            return bool(rows[last] >> start & 1) and path[1] < path[-1]
        need = k - len(path)
        free = allowed & ~visited
        for nxt in iter_bits(rows[last] & free):
            if need > 1:
                # remaining vertices must be reachable and the walk must get home
                region = reach(rows, nxt, free)
                if region.bit_count() < need or not (
                    rows[start] & region & ~(1 << nxt)
                ):
                    continue
            elif not rows[nxt] >> start & 1:
                continue
            path.append(nxt)
            if extend(start, nxt, visited | 1 << nxt, allowed):
                return True
            path.pop()
        return False

    for start in iter_bits(core):
        allowed = core & ~((2 << start) - 1)
        region = reach(rows, start, allowed | 1 << start)
        if region.bit_count() < k:
            continue
        path.append(start)
        if extend(start, start, 1 << start, region & ~(1 << start)):
            return path
        path.pop()
    return None


# embeddings ---------------------------------------------------------------


def _search_order(pattern: Graph) -> tuple[list[int], list[int]]:
    """Vertex order for embedding search plus, per position, the position of an
    earlier isomorphic component's root that this one must follow (or -1).
    """
    degs = pattern.degrees()
    comps = sorted(
        components(pattern),
        key=lambda c: (-len(c), -sum(degs[v] for v in c), c[0]),
    )
    order: list[int] = []
    after = []
    previous: Optional[tuple] = None
    previous_root = -1
    for comp in comps:
        inside = set(comp)
        local: list[int] = []
        placed: set[int] = set()
        while len(local) < len(comp):
            best = max(
                (v for v in comp if v not in placed),
                key=lambda v: (
                    sum(1 for w in pattern.neighbours(v) if w in placed),
                    degs[v],
                    -v,
                ),
            )
            local.append(best)
            placed.add(best)
        pos = {v: i for i, v in enumerate(local)}
        shape = tuple(
            (degs[v], tuple(sorted(pos[w] for w in pattern.neighbours(v) if w in inside and pos[w] < pos[v])))
            for v in local
        )
        root_position = len(order)
        if shape == previous:
            after.append(previous_root)
        else:
            after.append(-1)
        after.extend([-1] * (len(local) - 1))
        previous, previous_root = shape, root_position
        order.extend(local)
    return order, after


def find_embedding(pattern: Graph, host: Graph) -> Optional[Embedding]:
    """An injective edge-preserving map of ``pattern`` into ``host``, or ``None``.

    Complete backtracking.  Candidates for a pattern vertex are the host
    vertices of at least its degree, adjacent to the images of all its
    already-placed neighbours.  Components with identical shape are placed
    with increasing root images, which loses no solutions.
    """
    p = pattern.order
    if p == 0:
        return Embedding(())
    if p > host.order or pattern.edge_count() > host.edge_count():
        return None
    order, after = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    hrows = host.rows
    by_degree = [mask_of(x for x in range(host.order) if hdeg[x] >= d) for d in range(max(pdeg) + 1)]
    back = [[pos[w] for w in pattern.neighbours(v) if pos[w] < i] for i, v in enumerate(order)]
    image = [0] * p

    def place(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = by_degree[pdeg[order[i]]] & ~used
        for j in back[i]:
            cand &= hrows[image[j]]
        if after[i] >= 0:
            cand &= ~((2 << image[after[i]]) - 1)
        for x in iter_bits(cand):
            image[i] = x
            if place(i + 1, used | 1 << x):
                return True
        return False

    if not place(0, 0):
        return None
    mapping = [0] * p
    for i, v in enumerate(order):
        mapping[v] = image[i]
    return Embedding(tuple(mapping))
