"""k-swappability, swapping numbers and constructive family witnesses.

A swap of edge e is a pair (A, B) with ``e in A``, ``A`` a set of edges,
``B`` an equal-sized set of non-edges, and ``G - A + B`` isomorphic to G.
Every witness carries the vertex map proving that isomorphism and is
re-checked before it leaves this module.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .core.graph import Edge, Graph, remove_edges, replace_edges, structural_report
from .core.iso import (
    CanonicalCode,
    VertexMap,
    are_isomorphic,
    automorphism_mapping_edge,
    edge_orbits,
)
from .deck import edge_deck
from .errors import (
    EdgeNotPresent,
    EmptyGraph,
    NotAFamilyInstance,
    SizeOutOfRange,
    SizeOutOfTheoremRange,
    WitnessVerificationError,
)
from .families import REMOVAL_FAMILIES, FamilyInstance, FamilyKind, build

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwapWitness:
    """Certificate that ``G - removed + added`` is isomorphic to G.

    Attributes:
        removed: The edge set A, sorted
        added: The non-edge set B, sorted
        iso_map: Vertex map with ``G.permute(iso_map) == G - A + B``
    """

    removed: Tuple[Edge, ...]
    added: Tuple[Edge, ...]
    iso_map: VertexMap

    def __post_init__(self) -> None:
        if len(self.removed) != len(self.added):
            raise WitnessVerificationError(
                f"|A| = {len(self.removed)} differs from |B| = {len(self.added)}"
            )
        if set(self.removed) & set(self.added):
            raise WitnessVerificationError("A and B share a vertex pair")

    @property
    def size(self) -> int:
        return len(self.removed)

    def verify(self, g: Graph) -> bool:
        """Independently re-check this witness against g."""
        if not all(g.has_edge(*e) for e in self.removed):
            return False
        if any(g.has_edge(*e) for e in self.added):
            return False
        if not all(0 <= v < g.order for e in self.added for v in e):
            return False
        try:
            return g.permute(self.iso_map) == replace_edges(g, self.removed, self.added)
        except ValueError:
            return False

    def to_dict(self) -> Dict:
        return {
            "removed": [str(e) for e in self.removed],
            "added": [str(e) for e in self.added],
            "iso_map": list(self.iso_map),
        }

    def describe(self) -> str:
        mapping = " ".join(f"{v}->{w}" for v, w in enumerate(self.iso_map) if v != w)
        return (
            f"A={{{', '.join(map(str, self.removed))}}} "
            f"B={{{', '.join(map(str, self.added))}}} "
            f"map=[{mapping or 'identity'}]"
        )


class SwapVerdict(Enum):
    FINITE = "finite"
    INFINITE = "inf"
    UNKNOWN = "unknown"   # no witness within the cap, cap below |E|


@dataclass(frozen=True)
class SwapNumberResult:
    """Outcome of a swapping-number computation."""

    verdict: SwapVerdict
    cap: int
    value: Optional[int] = None
    witnesses: Dict[Edge, SwapWitness] = field(default_factory=dict)

    def render(self) -> str:
        if self.verdict is SwapVerdict.FINITE:
            return str(self.value)
        if self.verdict is SwapVerdict.INFINITE:
            return "inf"
        return f">{self.cap}"


def _normalize_edge(g: Graph, e: Sequence[int]) -> Edge:
    edge = Edge.of(*e)
    if not g.has_edge(*edge):
        raise EdgeNotPresent(f"edge {edge} is not in the graph")
    return edge


def find_swap(g: Graph, e: Sequence[int], k: int) -> Optional[SwapWitness]:
    """Find the first swap of e with ``|A| <= k``.

    Sizes are tried in increasing order, so the witness returned is of
    minimum size. Within a size, A-sets and then B-sets are enumerated in
    lexicographic order.

    Args:
        g: Host graph
        e: Edge that must belong to A
        k: Largest swap size tried

    Returns:
        A verified SwapWitness, or None when no swap of size <= k exists

    Raises:
        EdgeNotPresent: If e is not an edge of g
        SizeOutOfRange: If k < 1
    """
    edge = _normalize_edge(g, e)
    if k < 1:
        raise SizeOutOfRange(f"swap size cap must be >= 1 (got {k})")
    others = [f for f in g.edges() if f != edge]
    non_edges = g.non_edges()
    target = sorted(g.degrees())

    for size in range(1, k + 1):
        if size > len(non_edges) or size - 1 > len(others):
            break
        for rest in combinations(others, size - 1):
            removed = tuple(sorted((edge,) + rest))
            base = remove_edges(g, removed)
            base_degrees = list(base.degrees())
            for added in combinations(non_edges, size):
                degrees = base_degrees.copy()
                for f in added:
                    degrees[f.u] += 1
                    degrees[f.v] += 1
                if sorted(degrees) != target:
                    continue
                vmap = are_isomorphic(g, replace_edges(g, removed, added))
                if vmap is not None:
                    witness = SwapWitness(removed, tuple(added), vmap)
                    logger.debug("swap of %s in %s: %s", edge, g, witness.describe())
                    return witness
    return None


def _transport(g: Graph, witness: SwapWitness, e: Edge, f: Edge) -> Optional[SwapWitness]:
    """Carry a witness for e over to f along an explicit automorphism."""
    sigma = automorphism_mapping_edge(g, e, f)
    if sigma is None:
        return None
    removed = tuple(sorted(Edge.of(sigma[a.u], sigma[a.v]) for a in witness.removed))
    added = tuple(sorted(Edge.of(sigma[b.u], sigma[b.v]) for b in witness.added))
    iso_map = tuple(sigma[witness.iso_map[v]] for v in range(g.order))
    moved = SwapWitness(removed, added, iso_map)
    return moved if moved.verify(g) else None


def _orbit_witnesses(g: Graph, k: int) -> Tuple[Dict[Edge, SwapWitness], Optional[Edge]]:
    """Minimum witnesses per edge; stops at the first edge with none."""
    witnesses: Dict[Edge, SwapWitness] = {}
    for orbit in edge_orbits(g):
        lead = orbit[0]
        witness = find_swap(g, lead, k)
        if witness is None:
            return witnesses, lead
        witnesses[lead] = witness
        for f in orbit[1:]:
            moved = _transport(g, witness, lead, f) or find_swap(g, f, witness.size)
            if moved is None:
                return witnesses, f
            witnesses[f] = moved
    return dict(sorted(witnesses.items())), None


def is_k_swappable(g: Graph, k: int) -> Optional[Dict[Edge, SwapWitness]]:
    """Return a witness for every edge when g is k-swappable, else None.

    Edges in one automorphism orbit share a witness transported by an
    explicit, verified automorphism.

    Raises:
        EmptyGraph: If g has no edges
    """
    if g.edge_count == 0:
        raise EmptyGraph("swappability needs at least one edge")
    if not g.non_edges():
        return None
    witnesses, failed = _orbit_witnesses(g, k)
    if failed is not None:
        logger.debug("%s is not %d-swappable: no witness for %s", g, k, failed)
        return None
    return witnesses


def swapping_number(g: Graph, cap: int) -> SwapNumberResult:
    """Compute the swapping number of g, searching swap sizes up to cap.

    Infinity is reported only when it is proven: the complement has no
    edges, or an exhaustive search with ``cap == |E|`` found no swap for
    some edge.

    Raises:
        EmptyGraph: If g has no edges
        SizeOutOfRange: If cap < 1 or cap > |E|
    """
    m = g.edge_count
    if m == 0:
        raise EmptyGraph("swapping number needs at least one edge")
    if not 1 <= cap <= m:
        raise SizeOutOfRange(f"swap cap {cap} outside 1..{m}")
    if not g.non_edges():
        return SwapNumberResult(SwapVerdict.INFINITE, cap)
    witnesses, failed = _orbit_witnesses(g, cap)
    if failed is not None:
        verdict = SwapVerdict.INFINITE if cap == m else SwapVerdict.UNKNOWN
        return SwapNumberResult(verdict, cap)
    value = max(w.size for w in witnesses.values())
    return SwapNumberResult(SwapVerdict.FINITE, cap, value, witnesses)


@dataclass(frozen=True)
class PairingReport:
    """Pairwise 2-swap matrix over removal classes.

    ``matrix[i][j]`` holds when some edge of class i and a different edge of
    class j can be swapped out together for two non-edges.
    """

    classes: Tuple[CanonicalCode, ...]
    matrix: Tuple[Tuple[bool, ...], ...]
    witnesses: Dict[Tuple[int, int], SwapWitness]

    @property
    def holds(self) -> bool:
        return all(all(row) for row in self.matrix)


def _pair_swap(g: Graph, e: Edge, f: Edge, non_edges: List[Edge], target: List[int]) -> Optional[SwapWitness]:
    removed = tuple(sorted((e, f)))
    base = remove_edges(g, removed)
    base_degrees = list(base.degrees())
    for added in combinations(non_edges, 2):
        degrees = base_degrees.copy()
        for b in added:
            degrees[b.u] += 1
            degrees[b.v] += 1
        if sorted(degrees) != target:
            continue
        vmap = are_isomorphic(g, replace_edges(g, removed, added))
        if vmap is not None:
            return SwapWitness(removed, tuple(added), vmap)
    return None


def full_2_swappable(g: Graph) -> PairingReport:
    """Check 2-swaps for every pair of removal classes.

    Raises:
        EmptyGraph: If g has no edges
        SizeOutOfRange: If g has a single edge
    """
    if g.edge_count == 0:
        raise EmptyGraph("full 2-swappability needs edges")
    if g.edge_count < 2:
        raise SizeOutOfRange("full 2-swappability needs at least two edges")
    deck = edge_deck(g)
    non_edges = g.non_edges()
    target = sorted(g.degrees())
    orbits = edge_orbits(g)
    k = len(deck.classes)
    cells = [[False] * k for _ in range(k)]
    witnesses: Dict[Tuple[int, int], SwapWitness] = {}

    for i, ci in enumerate(deck.classes):
        # automorphisms preserve card classes, so one lead per orbit suffices
        leads = [orbit[0] for orbit in orbits if orbit[0] in ci.edges]
        for j in range(i, k):
            cj = deck.classes[j]
            found = None
            if len(non_edges) >= 2:
                for e in leads:
                    for f in cj.edges:
                        if f == e:
                            continue
                        found = _pair_swap(g, e, f, non_edges, target)
                        if found is not None:
                            break
                    if found is not None:
                        break
            if found is not None:
                cells[i][j] = cells[j][i] = True
                witnesses[(i, j)] = found
    return PairingReport(
        classes=tuple(c.code for c in deck.classes),
        matrix=tuple(tuple(row) for row in cells),
        witnesses=witnesses,
    )


# Smallest family sizes the constructive proofs cover.
_THEOREM_MIN_SIZE = {
    FamilyKind.KN_MINUS_MATCHING: 4,
    FamilyKind.KN_MINUS_HAMILTONIAN: 5,
    FamilyKind.KNN_MINUS_MATCHING: 2,
    FamilyKind.KNN_MINUS_HAMILTONIAN: 4,
}


def _matching_witness(instance: FamilyInstance, e: Edge) -> SwapWitness:
    u, v = e.u, e.v
    u2, v2 = instance.partner(u), instance.partner(v)
    iso = list(range(instance.graph.order))
    iso[u], iso[v2] = v2, u
    return SwapWitness(
        removed=tuple(sorted((e, Edge.of(u2, v2)))),
        added=tuple(sorted((Edge.of(u, u2), Edge.of(v, v2)))),
        iso_map=tuple(iso),
    )


def _hamiltonian_witness(instance: FamilyInstance, e: Edge, mirrored: bool) -> SwapWitness:
    seq = list(instance.cycle)
    size = len(seq)
    u, v = e.u, e.v
    i = seq.index(u)
    forward = [seq[(i + t) % size] for t in range(size)]
    backward = [seq[(i - t) % size] for t in range(size)]
    path1 = forward[: forward.index(v) + 1]
    path2 = backward[: backward.index(v) + 1]
    if (path1[1] > path2[1]) != mirrored:
        path1, path2 = path2, path1
    u2, v2 = path1[1], path2[-2]

    # old cycle read from u along path1; the rebuilt cycle u..v2 u2..v
    old = path1 + path2[-2:0:-1]
    new = path2[:-1] + path1[1:]
    iso = [0] * instance.graph.order
    for a, b in zip(old, new):
        iso[a] = b
    return SwapWitness(
        removed=tuple(sorted((e, Edge.of(u2, v2)))),
        added=tuple(sorted((Edge.of(u, u2), Edge.of(v, v2)))),
        iso_map=tuple(iso),
    )


def swap_witness_family(instance: FamilyInstance, e: Sequence[int]) -> SwapWitness:
    """Build the explicit 2-swap of e for a matching or Hamiltonian family.

    For ``K_n - M`` and ``K_{n,n} - M`` with ``u = min(e)``: ``u' = M(u)``,
    ``v' = M(v)``, ``A = {uv, u'v'}``, ``B = {uu', vv'}`` and the map swaps
    u with v'. For the Hamiltonian families the removed cycle H is cut at
    ``uu'`` and ``vv'`` (u' and v' the H-neighbors of u and v on opposite
    u-v paths of H) and closed with uv and u'v'; the map takes H onto the
    rebuilt cycle.

    Raises:
        NotAFamilyInstance: If the instance is not one of those families or
            its graph differs from the generator's output
        EdgeNotPresent: If e is not an edge
        SizeOutOfTheoremRange: If the family size is below the covered range
        WitnessVerificationError: If no orientation yields a valid witness
    """
    kind = instance.spec.kind
    if kind not in REMOVAL_FAMILIES:
        raise NotAFamilyInstance(f"{instance.spec.describe()} has no constructive swap")
    if build(instance.spec).graph != instance.graph:
        raise NotAFamilyInstance(f"graph does not match the generated {instance.spec.describe()}")
    edge = _normalize_edge(instance.graph, e)
    if instance.spec.n < _THEOREM_MIN_SIZE[kind]:
        raise SizeOutOfTheoremRange(
            f"{instance.spec.describe()}: construction needs n >= {_THEOREM_MIN_SIZE[kind]}"
        )

    g = instance.graph
    if kind in (FamilyKind.KN_MINUS_MATCHING, FamilyKind.KNN_MINUS_MATCHING):
        candidates = [_matching_witness(instance, edge)]
    else:
        candidates = [_hamiltonian_witness(instance, edge, mirrored) for mirrored in (False, True)]
    for witness in candidates:
        if witness.verify(g):
            return witness
    raise WitnessVerificationError(f"{instance.spec.describe()}: constructed swap of {edge} is invalid")


@dataclass(frozen=True)
class EdgeWitnessCheck:
    """Constructive and brute-force witnesses for one edge."""

    edge: Edge
    constructive: Optional[SwapWitness]
    brute_force: Optional[SwapWitness]
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.constructive is not None and self.brute_force is not None


@dataclass(frozen=True)
class FamilyWitnessReport:
    description: str
    regular_degree: Optional[int]
    checks: Tuple[EdgeWitnessCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[EdgeWitnessCheck]:
        return [c for c in self.checks if not c.ok]


def verify_family_witnesses(instance: FamilyInstance) -> FamilyWitnessReport:
    """Check the constructive swap and a brute-force 2-swap for every edge.

    Raises:
        NotAFamilyInstance: If the instance has no constructive swap
        SizeOutOfTheoremRange: If the family size is below the covered range
    """
    g = instance.graph
    checks = []
    for e in g.edges():
        error = None
        try:
            constructive: Optional[SwapWitness] = swap_witness_family(instance, e)
        except WitnessVerificationError as exc:
            constructive, error = None, str(exc)
        checks.append(EdgeWitnessCheck(e, constructive, find_swap(g, e, 2), error))
    report = FamilyWitnessReport(
        description=instance.spec.describe(),
        regular_degree=structural_report(g).regular_degree,
        checks=tuple(checks),
    )
    logger.info("%s: %d/%d edges verified", report.description,
                len(checks) - len(report.failures), len(checks))
    return report
