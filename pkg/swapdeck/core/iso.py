"""Graph isomorphism and canonical labeling.

Canonical labeling is individualization-refinement: vertices are colored
by degree (and an optional caller coloring), the coloring is refined until
every color class sees the same multiset of neighbor colors, and the first
non-singleton cell is split by trying each of its vertices in turn. Among
all discrete leaves, the one whose relabeled adjacency rows are
lexicographically smallest is canonical.

Three prunings keep the search small on symmetric graphs, each one only
skips subtrees that are images of an explored subtree under an
automorphism fixing the current prefix:

- twins (vertices with equal neighborhoods up to each other) are tried once;
- vertices already in the orbit of a tried vertex, under automorphisms found
  so far that fix the prefix, are skipped;
- a sibling whose first leaf reproduces the first leaf of the first child
  yields an automorphism mapping one child onto the other and is skipped.

Results are memoized in a bounded LRU cache shared by all threads.
"""

import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from cachetools import LRUCache

from ..codec import encode
from ..config import CANONICAL_CACHE_SIZE
from ..errors import OrderTooLarge
from .graph import MAX_ORDER, Edge, Graph, _bits

CanonicalCode = bytes
VertexMap = Tuple[int, ...]

_cache: LRUCache = LRUCache(maxsize=CANONICAL_CACHE_SIZE)
_cache_lock = threading.RLock()
_cache_stats = {"hits": 0, "misses": 0}


@dataclass(frozen=True)
class Labeling:
    """A canonical labeling of a (possibly vertex-colored) graph.

    Attributes:
        code: Canonical code; equal codes mean isomorphic inputs
        order: ``order[i]`` is the input vertex placed at canonical position ``i``
    """

    code: CanonicalCode
    order: Tuple[int, ...]

    @property
    def images(self) -> VertexMap:
        """Map from input vertex to canonical position."""
        out = [0] * len(self.order)
        for position, v in enumerate(self.order):
            out[v] = position
        return tuple(out)


def _refine(nbrs: List[List[int]], colors: Sequence) -> List[int]:
    n = len(colors)
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [ranks[s] for s in sigs]
        if len(ranks) == count:
            return refined
        count = len(ranks)
        colors = refined


def _individualize(colors: List[int], w: int) -> List[int]:
    return [2 * c + (0 if v == w else 1) for v, c in enumerate(colors)]


def _target_cell(colors: List[int]) -> Optional[List[int]]:
    cells: List[List[int]] = [[] for _ in range(max(colors) + 1)]
    for v, c in enumerate(colors):
        cells[c].append(v)
    for cell in cells:
        if len(cell) > 1:
            return cell
    return None


def _in_explored_orbit(w: int, explored: List[int], autos: List[Tuple[int, ...]],
                       fixed: Tuple[int, ...], n: int) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        if all(a[f] == f for f in fixed):
            for v in range(n):
                ra, rb = find(v), find(a[v])
                if ra != rb:
                    parent[ra] = rb
    root = find(w)
    return any(find(x) == root for x in explored)


def _search(g: Graph, initial: Sequence) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Return (canonical rows, canonical order) for g under an initial coloring."""
    n = g.order
    rows = g.rows
    nbrs = [list(_bits(r)) for r in rows]
    autos: List[Tuple[int, ...]] = []
    best: Dict[str, Tuple[int, ...]] = {}

    def leaf_of(colors: List[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        order = [0] * n
        for v, c in enumerate(colors):
            order[c] = v
        key = tuple(sum(1 << colors[w] for w in nbrs[v]) for v in order)
        return key, tuple(order)

    def record_auto(src: Tuple[int, ...], dst: Tuple[int, ...]) -> None:
        a = [0] * n
        for i in range(n):
            a[src[i]] = dst[i]
        autos.append(tuple(a))

    def first_leaf(colors: List[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        while True:
            cell = _target_cell(colors)
            if cell is None:
                return leaf_of(colors)
            colors = _refine(nbrs, _individualize(colors, cell[0]))

    def explore(colors: List[int], fixed: Tuple[int, ...]) -> None:
        cell = _target_cell(colors)
        if cell is None:
            key, order = leaf_of(colors)
            if "key" not in best or key < best["key"]:
                best["key"], best["order"] = key, order
            elif key == best["key"]:
                record_auto(best["order"], order)
            return

        explored: List[int] = []
        first_key: Tuple[int, ...] = ()
        first_order: Tuple[int, ...] = ()
        for w in cell:
            if explored:
                if any((rows[w] & ~(1 << x)) == (rows[x] & ~(1 << w)) for x in explored):
                    continue
                if _in_explored_orbit(w, explored, autos, fixed, n):
                    continue
            child = _refine(nbrs, _individualize(colors, w))
            key, order = first_leaf(child)
            if not explored:
                first_key, first_order = key, order
            elif key == first_key:
                record_auto(first_order, order)
                continue
            explored.append(w)
            explore(child, fixed + (w,))

    explore(_refine(nbrs, list(initial)), ())
    return best["key"], best["order"]


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> Labeling:
    """Compute the canonical labeling of g, optionally respecting a vertex coloring.

    Args:
        g: Graph to label
        colors: Optional color per vertex (0..255); only color-preserving
            relabelings are considered

    Returns:
        Labeling whose code is equal for two inputs iff they are isomorphic
        (by a color-preserving map when colors are given)

    Raises:
        OrderTooLarge: If g exceeds MAX_ORDER
    """
    if g.order > MAX_ORDER:
        raise OrderTooLarge(f"order {g.order} exceeds {MAX_ORDER}")
    color_key = tuple(colors) if colors is not None else None
    if color_key is not None and len(color_key) != g.order:
        raise ValueError("one color per vertex is required")
    cache_key = (g.order, g.rows, color_key)
    with _cache_lock:
        hit = _cache.get(cache_key)
        if hit is not None:
            _cache_stats["hits"] += 1
            return hit
        _cache_stats["misses"] += 1

    degrees = g.degrees()
    if color_key is None:
        initial = list(degrees)
    else:
        initial = [(color_key[v], degrees[v]) for v in range(g.order)]
    key, order = _search(g, initial)
    code = encode(Graph._trusted(g.order, key)).encode("ascii")
    if color_key is not None:
        code += b"/" + bytes(color_key[v] for v in order)
    labeling = Labeling(code=code, order=order)

    with _cache_lock:
        _cache[cache_key] = labeling
    return labeling


def canonical_form(g: Graph, colors: Optional[Sequence[int]] = None) -> CanonicalCode:
    """Canonical code of g's isomorphism class (graph6 of the canonical relabeling)."""
    return canonical_labeling(g, colors).code


def clear_canonical_cache() -> None:
    with _cache_lock:
        _cache.clear()
        _cache_stats["hits"] = 0
        _cache_stats["misses"] = 0


def canonical_cache_stats() -> Dict[str, int]:
    with _cache_lock:
        return {"entries": len(_cache), **_cache_stats}


def _invariants(g: Graph) -> Tuple:
    degrees = g.degrees()
    neighbor_degrees = sorted(
        tuple(sorted(degrees[w] for w in _bits(row))) for row in g.rows
    )
    return (g.order, g.edge_count, tuple(sorted(degrees)), tuple(neighbor_degrees))


def are_isomorphic(g: Graph, h: Graph) -> Optional[VertexMap]:
    """Return a vertex map taking g onto h, or None when g and h are not isomorphic.

    The returned map ``m`` satisfies ``g.permute(m) == h``.
    """
    if g.order != h.order or g.edge_count != h.edge_count:
        return None
    if _invariants(g) != _invariants(h):
        return None
    lg = canonical_labeling(g)
    lh = canonical_labeling(h)
    if lg.code != lh.code:
        return None
    images = [0] * g.order
    for position, v in enumerate(lg.order):
        images[v] = lh.order[position]
    vmap = tuple(images)
    if g.permute(vmap) != h:
        raise AssertionError("canonical labeling produced an invalid isomorphism")
    return vmap


def _edge_colors(g: Graph, e: Edge) -> List[int]:
    return [1 if v in (e.u, e.v) else 0 for v in range(g.order)]


def edge_orbits(g: Graph) -> List[List[Edge]]:
    """Partition the edges of g into automorphism orbits.

    Two edges share an orbit iff some automorphism of g maps one onto the
    other. Orbits are listed by their smallest edge.
    """
    groups: Dict[CanonicalCode, List[Edge]] = {}
    for e in g.edges():
        groups.setdefault(canonical_form(g, _edge_colors(g, e)), []).append(e)
    return sorted(groups.values(), key=lambda orbit: orbit[0])


def automorphism_mapping_edge(g: Graph, e: Edge, f: Edge) -> Optional[VertexMap]:
    """Return an automorphism of g sending edge e onto edge f, or None."""
    le = canonical_labeling(g, _edge_colors(g, e))
    lf = canonical_labeling(g, _edge_colors(g, f))
    if le.code != lf.code:
        return None
    images = [0] * g.order
    for position, v in enumerate(le.order):
        images[v] = lf.order[position]
    sigma = tuple(images)
    if g.permute(sigma) != g or Edge.of(sigma[e.u], sigma[e.v]) != f:
        raise AssertionError("colored labeling produced an invalid automorphism")
    return sigma
