"""Generators for the regular graph families and a few classic graphs.

Every generator uses one fixed labeling so constructive swap witnesses can
read the removed matching or Hamiltonian cycle straight off the instance:

- K_n on ``0..n-1``; removed matching ``{(2i, 2i+1)}``; removed Hamiltonian
  cycle ``0-1-...-(n-1)-0``.
- K_{n,n} with parts ``U = 0..n-1`` and ``V = n..2n-1``; removed matching
  ``{(i, n+i)}``; removed Hamiltonian cycle ``u0 v0 u1 v1 ... u(n-1) v(n-1) u0``.

Any two perfect matchings (or Hamiltonian cycles) of K_n or K_{n,n} are
related by an automorphism of the host, so these choices lose no generality.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .core.graph import MAX_ORDER, Edge, EdgeSet, Graph, is_connected
from .errors import NotBipartiteWithGivenParts, ParameterOutOfRange, WitnessVerificationError


class FamilyKind(Enum):
    """Graph families the generator knows, valued by their CLI names."""
    KN_MINUS_MATCHING = "kn-m"
    KN_MINUS_HAMILTONIAN = "kn-h"
    KNN_MINUS_MATCHING = "knn-m"
    KNN_MINUS_HAMILTONIAN = "knn-h"
    HYPERCUBE = "cube"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "knm"


# The four families whose swap witnesses are constructed explicitly.
REMOVAL_FAMILIES = (
    FamilyKind.KN_MINUS_MATCHING,
    FamilyKind.KN_MINUS_HAMILTONIAN,
    FamilyKind.KNN_MINUS_MATCHING,
    FamilyKind.KNN_MINUS_HAMILTONIAN,
)


@dataclass(frozen=True)
class FamilySpec:
    """A family member request.

    ``n`` is the family size (clique order, part size, cube dimension or
    cycle length); ``m`` is the second part size of K_{n,m} and defaults to n.
    """

    kind: FamilyKind
    n: int
    m: Optional[int] = None

    @property
    def order(self) -> int:
        if self.kind in (FamilyKind.KNN_MINUS_MATCHING, FamilyKind.KNN_MINUS_HAMILTONIAN):
            return 2 * self.n
        if self.kind is FamilyKind.COMPLETE_BIPARTITE:
            return self.n + (self.m if self.m is not None else self.n)
        if self.kind is FamilyKind.HYPERCUBE:
            return 1 << self.n if 0 <= self.n < 8 else MAX_ORDER + 1
        return self.n

    @property
    def is_bipartite_host(self) -> bool:
        return self.kind in (FamilyKind.KNN_MINUS_MATCHING, FamilyKind.KNN_MINUS_HAMILTONIAN)

    def validate(self) -> List[str]:
        """Validate parameters for the kind.

        Returns:
            List of validation errors (empty if valid)
        """
        errors = []
        kind, n = self.kind, self.n
        if kind is FamilyKind.KN_MINUS_MATCHING:
            if n < 4 or n % 2:
                errors.append(f"K_n - M needs an even n >= 4 (got {n})")
        elif kind is FamilyKind.KN_MINUS_HAMILTONIAN:
            if n < 4:
                errors.append(f"K_n - H needs n >= 4 (got {n})")
        elif kind is FamilyKind.KNN_MINUS_MATCHING:
            if n < 2:
                errors.append(f"K_n,n - M needs n >= 2 (got {n})")
        elif kind is FamilyKind.KNN_MINUS_HAMILTONIAN:
            if n < 3:
                errors.append(f"K_n,n - H needs n >= 3 (got {n})")
        elif kind is FamilyKind.HYPERCUBE:
            if n < 1:
                errors.append(f"hypercube dimension must be >= 1 (got {n})")
        elif kind is FamilyKind.CYCLE:
            if n < 3:
                errors.append(f"cycle length must be >= 3 (got {n})")
        elif kind is FamilyKind.COMPLETE:
            if n < 1:
                errors.append(f"complete graph needs n >= 1 (got {n})")
        elif kind is FamilyKind.COMPLETE_BIPARTITE:
            if n < 1 or (self.m is not None and self.m < 1):
                errors.append("complete bipartite part sizes must be >= 1")
        if self.m is not None and kind is not FamilyKind.COMPLETE_BIPARTITE:
            errors.append(f"--m only applies to {FamilyKind.COMPLETE_BIPARTITE.value}")
        if not errors and self.order > MAX_ORDER:
            errors.append(f"order {self.order} exceeds the supported maximum {MAX_ORDER}")
        return errors

    def describe(self) -> str:
        n = self.n
        return {
            FamilyKind.KN_MINUS_MATCHING: f"K_{n} - M",
            FamilyKind.KN_MINUS_HAMILTONIAN: f"K_{n} - H",
            FamilyKind.KNN_MINUS_MATCHING: f"K_{n},{n} - M",
            FamilyKind.KNN_MINUS_HAMILTONIAN: f"K_{n},{n} - H",
            FamilyKind.HYPERCUBE: f"Q_{n}",
            FamilyKind.CYCLE: f"C_{n}",
            FamilyKind.COMPLETE: f"K_{n}",
            FamilyKind.COMPLETE_BIPARTITE: f"K_{n},{self.m if self.m is not None else n}",
        }[self.kind]


@dataclass(frozen=True)
class FamilyInstance:
    """A generated graph together with how it was built.

    Attributes:
        spec: The request it was built from
        graph: The generated graph
        removed_structure: Matching or Hamiltonian cycle removed from the host
            (empty for kinds that remove nothing)
        cycle: Vertex sequence of the removed Hamiltonian cycle, else empty
    """

    spec: FamilySpec
    graph: Graph
    removed_structure: EdgeSet = frozenset()
    cycle: Tuple[int, ...] = ()

    def partner(self, v: int) -> int:
        """Matching partner of v in the removed perfect matching."""
        for e in self.removed_structure:
            if v in e:
                return e.other(v)
        raise KeyError(v)


def _cycle_edges(seq: Sequence[int]) -> EdgeSet:
    return frozenset(Edge.of(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def _complete_rows(order: int) -> List[int]:
    full = (1 << order) - 1
    return [full & ~(1 << i) for i in range(order)]


def _bipartite_rows(n: int, m: int) -> List[int]:
    left = (1 << n) - 1
    right = ((1 << m) - 1) << n
    return [right] * n + [left] * m


def _without(rows: List[int], removed: Iterable[Edge]) -> Graph:
    rows = list(rows)
    for e in removed:
        rows[e.u] &= ~(1 << e.v)
        rows[e.v] &= ~(1 << e.u)
    return Graph(len(rows), tuple(rows))


def is_perfect_matching(edges: Iterable[Edge], order: int) -> bool:
    """True iff ``edges`` are pairwise disjoint and cover ``0..order-1``."""
    covered = 0
    count = 0
    for e in edges:
        mask = (1 << e.u) | (1 << e.v)
        if covered & mask:
            return False
        covered |= mask
        count += 1
    return covered == (1 << order) - 1 and 2 * count == order


def is_spanning_cycle(edges: Iterable[Edge], order: int) -> bool:
    """True iff ``edges`` form a single cycle through every vertex."""
    edges = list(edges)
    if order < 3 or len(edges) != order:
        return False
    sub = Graph.from_edges(order, edges)
    return all(d == 2 for d in sub.degrees()) and is_connected(sub)


def build(spec: FamilySpec) -> FamilyInstance:
    """Generate a family instance with its removed structure.

    Raises:
        ParameterOutOfRange: If the parameters are outside the kind's range
    """
    errors = spec.validate()
    if errors:
        raise ParameterOutOfRange("; ".join(errors))
    kind, n = spec.kind, spec.n

    if kind is FamilyKind.KN_MINUS_MATCHING:
        matching = frozenset(Edge(2 * i, 2 * i + 1) for i in range(n // 2))
        instance = FamilyInstance(spec, _without(_complete_rows(n), matching), matching)
    elif kind is FamilyKind.KN_MINUS_HAMILTONIAN:
        seq = tuple(range(n))
        cycle = _cycle_edges(seq)
        instance = FamilyInstance(spec, _without(_complete_rows(n), cycle), cycle, seq)
    elif kind is FamilyKind.KNN_MINUS_MATCHING:
        matching = frozenset(Edge(i, n + i) for i in range(n))
        instance = FamilyInstance(spec, _without(_bipartite_rows(n, n), matching), matching)
    elif kind is FamilyKind.KNN_MINUS_HAMILTONIAN:
        seq = tuple(v for i in range(n) for v in (i, n + i))
        cycle = _cycle_edges(seq)
        instance = FamilyInstance(spec, _without(_bipartite_rows(n, n), cycle), cycle, seq)
    elif kind is FamilyKind.HYPERCUBE:
        size = 1 << n
        cube = [(v, v ^ (1 << b)) for v in range(size) for b in range(n) if v < v ^ (1 << b)]
        instance = FamilyInstance(spec, Graph.from_edges(size, cube))
    elif kind is FamilyKind.CYCLE:
        instance = FamilyInstance(spec, Graph.from_edges(n, _cycle_edges(range(n))))
    elif kind is FamilyKind.COMPLETE:
        instance = FamilyInstance(spec, Graph(n, tuple(_complete_rows(n))))
    else:
        m = spec.m if spec.m is not None else n
        instance = FamilyInstance(spec, Graph(n + m, tuple(_bipartite_rows(n, m))))

    if kind in (FamilyKind.KN_MINUS_MATCHING, FamilyKind.KNN_MINUS_MATCHING):
        if not is_perfect_matching(instance.removed_structure, spec.order):
            raise WitnessVerificationError(f"{spec.describe()}: removed edges are not a perfect matching")
    elif kind in (FamilyKind.KN_MINUS_HAMILTONIAN, FamilyKind.KNN_MINUS_HAMILTONIAN):
        if not is_spanning_cycle(instance.removed_structure, spec.order):
            raise WitnessVerificationError(f"{spec.describe()}: removed edges are not a Hamiltonian cycle")
    return instance


def generate(spec: FamilySpec) -> Graph:
    """Generate the graph of a family instance."""
    return build(spec).graph


def complete(n: int) -> Graph:
    return generate(FamilySpec(FamilyKind.COMPLETE, n))


def complete_bipartite(n: int, m: int) -> Graph:
    return generate(FamilySpec(FamilyKind.COMPLETE_BIPARTITE, n, m))


def cycle(n: int) -> Graph:
    return generate(FamilySpec(FamilyKind.CYCLE, n))


def hypercube(d: int) -> Graph:
    return generate(FamilySpec(FamilyKind.HYPERCUBE, d))


def bipartite_complement(
    g: Graph,
    part_sizes: Tuple[int, int],
    part_assignment: Optional[Sequence[int]] = None,
) -> Graph:
    """Return ``K_{n,m} - g`` for a bipartite g with the given parts.

    Args:
        g: Graph whose edges all cross the parts
        part_sizes: ``(n, m)``; must add up to g's order
        part_assignment: Part (0 or 1) of each vertex; defaults to the first
            n vertices in part 0 and the rest in part 1

    Raises:
        NotBipartiteWithGivenParts: If the parts do not fit g or some edge
            lies inside a part
    """
    n, m = part_sizes
    if n + m != g.order:
        raise NotBipartiteWithGivenParts(f"parts {n}+{m} do not cover {g.order} vertices")
    if part_assignment is None:
        part_assignment = [0] * n + [1] * m
    if len(part_assignment) != g.order or any(p not in (0, 1) for p in part_assignment):
        raise NotBipartiteWithGivenParts("part assignment must give 0 or 1 for every vertex")
    if sum(1 for p in part_assignment if p == 0) != n:
        raise NotBipartiteWithGivenParts(f"part assignment does not put {n} vertices in part 0")
    for e in g.edges():
        if part_assignment[e.u] == part_assignment[e.v]:
            raise NotBipartiteWithGivenParts(f"edge {e} lies inside part {part_assignment[e.u]}")

    cross = [
        (u, v)
        for u, v in combinations(range(g.order), 2)
        if part_assignment[u] != part_assignment[v] and not g.has_edge(u, v)
    ]
    return Graph.from_edges(g.order, cross)
