"""Simple undirected graphs on a labeled vertex set, stored as bitset rows.

A Graph is a value: every edit returns a new Graph and the original is
never touched. Row ``i`` is an integer whose bit ``j`` is set iff ``ij``
is an edge. Orders are capped at MAX_ORDER so a row always fits a word.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..errors import DuplicateEdge, MissingEdge, OrderTooLarge

MAX_ORDER = 16


class Edge(NamedTuple):
    """Unordered vertex pair, always stored with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Normalize an unordered pair.

        Raises:
            ValueError: If ``a == b`` (loops are not simple-graph edges)
        """
        if a == b:
            raise ValueError(f"loop at vertex {a} is not a simple edge")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


EdgeSet = FrozenSet[Edge]


def edge_set(pairs: Iterable[Sequence[int]]) -> EdgeSet:
    """Build an EdgeSet from any iterable of 2-sequences."""
    return frozenset(Edge.of(a, b) for a, b in pairs)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Attributes:
        order: Number of vertices, labeled ``0 .. order-1``
        rows: Adjacency bitsets, one per vertex
    """

    order: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("a graph needs at least one vertex")
        if self.order > MAX_ORDER:
            raise OrderTooLarge(f"order {self.order} exceeds the supported maximum {MAX_ORDER}")
        if len(self.rows) != self.order:
            raise ValueError(f"expected {self.order} rows, got {len(self.rows)}")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} references a vertex outside 0..{self.order - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, order: int, rows: Tuple[int, ...]) -> "Graph":
        # Skips validation; only for rows derived from an already valid graph.
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from an edge list.

        Raises:
            OrderTooLarge: If ``order`` exceeds MAX_ORDER
            ValueError: If an edge is a loop or an endpoint is out of range
        """
        if order > MAX_ORDER:
            raise OrderTooLarge(f"order {order} exceeds the supported maximum {MAX_ORDER}")
        rows = [0] * order
        for a, b in edges:
            e = Edge.of(a, b)
            if e.v >= order or e.u < 0:
                raise ValueError(f"edge {e} out of range for order {order}")
            rows[e.u] |= 1 << e.v
            rows[e.v] |= 1 << e.u
        return cls(order, tuple(rows))

    # Queries

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.order and 0 <= v < self.order):
            return False
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def edges(self) -> List[Edge]:
        """All edges in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def non_edges(self) -> List[Edge]:
        """All edges of the complement in lexicographic order."""
        return complement(self).edges()

    def permute(self, images: Sequence[int]) -> "Graph":
        """Relabel vertex ``v`` as ``images[v]``.

        ``images`` must be a permutation of ``0 .. order-1``.
        """
        n = self.order
        if sorted(images) != list(range(n)):
            raise ValueError("images is not a permutation of the vertex set")
        rows = [0] * n
        for v, row in enumerate(self.rows):
            mask = 0
            for w in _bits(row):
                mask |= 1 << images[w]
            rows[images[v]] = mask
        return Graph._trusted(n, tuple(rows))

    def __str__(self) -> str:
        return f"Graph(n={self.order}, edges=[{' '.join(str(e) for e in self.edges())}])"


def _check_range(g: Graph, e: Edge) -> bool:
    return 0 <= e.u and e.v < g.order


def remove_edges(g: Graph, a: Iterable[Sequence[int]]) -> Graph:
    """Return ``g - a``.

    Raises:
        MissingEdge: If some edge of ``a`` is absent from ``g``
    """
    rows = list(g.rows)
    for pair in a:
        e = Edge.of(*pair)
        if not _check_range(g, e) or not rows[e.u] >> e.v & 1:
            raise MissingEdge(f"edge {e} is not in the graph")
        rows[e.u] &= ~(1 << e.v)
        rows[e.v] &= ~(1 << e.u)
    return Graph._trusted(g.order, tuple(rows))


def add_edges(g: Graph, b: Iterable[Sequence[int]]) -> Graph:
    """Return ``g + b``.

    Raises:
        DuplicateEdge: If some edge of ``b`` is already present
        MissingEdge: If an endpoint lies outside the vertex set
    """
    rows = list(g.rows)
    for pair in b:
        e = Edge.of(*pair)
        if not _check_range(g, e):
            raise MissingEdge(f"edge {e} is out of range for order {g.order}")
        if rows[e.u] >> e.v & 1:
            raise DuplicateEdge(f"edge {e} is already in the graph")
        rows[e.u] |= 1 << e.v
        rows[e.v] |= 1 << e.u
    return Graph._trusted(g.order, tuple(rows))


def replace_edges(g: Graph, a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> Graph:
    """Return ``g - a + b``."""
    return add_edges(remove_edges(g, a), b)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph._trusted(
        g.order, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows))
    )


@dataclass(frozen=True)
class StructuralReport:
    """Degree and connectivity facts about a graph."""

    degrees: Tuple[int, ...]          # sorted degree multiset
    regular_degree: Optional[int]     # r when regular, else None
    is_connected: bool
    is_bipartite: bool

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.order) - 1


def two_coloring(g: Graph) -> Optional[Tuple[int, ...]]:
    """Return a proper 2-coloring (0/1 per vertex) or None if g is not bipartite."""
    color = [-1] * g.order
    for start in range(g.order):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _bits(g.rows[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def structural_report(g: Graph) -> StructuralReport:
    degrees = tuple(sorted(g.degrees()))
    regular = degrees[0] if degrees[0] == degrees[-1] else None
    return StructuralReport(
        degrees=degrees,
        regular_degree=regular,
        is_connected=is_connected(g),
        is_bipartite=two_coloring(g) is not None,
    )
