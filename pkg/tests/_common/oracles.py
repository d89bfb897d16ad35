"""Brute-force oracles, independent of the library's search code.

Isomorphism here is either exhaustive permutation search or networkx's
VF2; graph corpora come from the networkx graph atlas (every graph on up
to 7 vertices, one per isomorphism class).
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from swapdeck import Graph
from swapdeck.core.graph import Edge


@lru_cache(maxsize=1)
def atlas() -> List[nx.Graph]:
    """The networkx graph atlas: all graphs on 0..7 vertices, loaded once."""
    return nx.graph_atlas_g()


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every vertex permutation (order <= 8)."""
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    return any(g.permute(p) == h for p in permutations(range(g.order)))


def brute_automorphisms(g: Graph) -> List[Tuple[int, ...]]:
    return [p for p in permutations(range(g.order)) if g.permute(p) == g]


def brute_edge_orbits(g: Graph) -> List[List[Edge]]:
    autos = brute_automorphisms(g)
    seen = set()
    orbits = []
    for e in g.edges():
        if e in seen:
            continue
        orbit = sorted({Edge.of(p[e.u], p[e.v]) for p in autos})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def atlas_graphs(max_order: int = 6, connected: bool = False) -> Iterator[Graph]:
    """Every graph on 1..max_order vertices (max_order <= 7), up to isomorphism."""
    for h in atlas():
        n = h.number_of_nodes()
        if n < 1 or n > max_order:
            continue
        if connected and not nx.is_connected(h):
            continue
        yield from_nx(h)


def nx_cards(h: nx.Graph) -> List[nx.Graph]:
    cards = []
    for e in list(h.edges()):
        card = h.copy()
        card.remove_edge(*e)
        cards.append(card)
    return cards


def card_classes(g: Graph) -> List[Tuple[nx.Graph, int]]:
    """Edge-card classes of g as (representative card, multiplicity), via VF2."""
    classes: List[List] = []
    for card in nx_cards(to_nx(g)):
        for entry in classes:
            if nx.is_isomorphic(entry[0], card):
                entry[1] += 1
                break
        else:
            classes.append([card, 1])
    return [(card, k) for card, k in classes]


def count_cards(h: nx.Graph, card: nx.Graph) -> int:
    return sum(1 for c in nx_cards(h) if nx.is_isomorphic(c, card))


def oracle_blockers(g: Graph, wanted: Sequence[Tuple[nx.Graph, int]], connected_only: bool = False) -> List[Graph]:
    """Every graph H on g's order and size, not isomorphic to g, whose deck holds ``wanted``."""
    host = to_nx(g)
    found = []
    for h in atlas():
        if h.number_of_nodes() != g.order or h.number_of_edges() != g.edge_count:
            continue
        if connected_only and not nx.is_connected(h):
            continue
        if nx.is_isomorphic(h, host):
            continue
        if all(count_cards(h, card) >= k for card, k in wanted):
            found.append(from_nx(h))
    return found


def count_vectors(multiplicities: Sequence[int], k: int) -> Iterator[Tuple[int, ...]]:
    """All count vectors with entries bounded by multiplicities summing to k."""
    if not multiplicities:
        if k == 0:
            yield ()
        return
    for c in range(min(multiplicities[0], k), -1, -1):
        for rest in count_vectors(multiplicities[1:], k - c):
            yield (c,) + rest


def oracle_ern(g: Graph, cap: int) -> Dict[str, object]:
    """ern by exhaustive atlas search: {"nr": bool, "value": int or None}."""
    classes = card_classes(g)
    full = [(card, k) for card, k in classes]
    if oracle_blockers(g, full):
        return {"nr": True, "value": None}
    mults = [k for _, k in classes]
    for size in range(1, min(cap, g.edge_count) + 1):
        for vector in count_vectors(mults, size):
            wanted = [(card, c) for (card, _), c in zip(classes, vector) if c]
            if not oracle_blockers(g, wanted):
                return {"nr": False, "value": size}
    return {"nr": False, "value": None}


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
