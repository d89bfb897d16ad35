"""Edge-decks and sub-decks.

An edge-card is the unlabeled graph ``G - e`` (all vertices kept). The
edge-deck is the multiset of all edge-cards, stored as card classes keyed
by canonical code. Sub-decks are count vectors over those classes, never
raw edge subsets, so each distinct multiset is produced exactly once.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Tuple

from .core.graph import Edge, Graph, remove_edges
from .core.iso import CanonicalCode, canonical_form
from .errors import EmptyGraph, InvalidSubDeck, SizeOutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CardClass:
    """One isomorphism class of edge-cards.

    Attributes:
        code: Canonical code of the card
        multiplicity: Number of edges whose removal yields this card
        representative_edge: Lexicographically first such edge
        card: The card ``G - representative_edge``
        edges: Every edge of the class, in lexicographic order
    """

    code: CanonicalCode
    multiplicity: int
    representative_edge: Edge
    card: Graph
    edges: Tuple[Edge, ...]


@dataclass(frozen=True)
class EdgeDeck:
    """The edge-deck of a host graph, classes ordered by canonical code."""

    host_order: int
    host_edge_count: int
    classes: Tuple[CardClass, ...]

    def multiplicity(self, code: CanonicalCode) -> int:
        for cls in self.classes:
            if cls.code == code:
                return cls.multiplicity
        return 0

    def by_code(self) -> Dict[CanonicalCode, CardClass]:
        return {cls.code: cls for cls in self.classes}

    def counter(self) -> Counter:
        """Card multiset as a Counter of canonical codes."""
        return Counter({cls.code: cls.multiplicity for cls in self.classes})

    def class_of(self, e: Edge) -> CardClass:
        for cls in self.classes:
            if e in cls.edges:
                return cls
        raise KeyError(e)


@dataclass(frozen=True)
class SubDeck:
    """A sub-multiset of an edge-deck.

    Attributes:
        counts: ``(code, multiplicity)`` pairs sorted by code, multiplicities >= 1
    """

    counts: Tuple[Tuple[CanonicalCode, int], ...]

    @classmethod
    def of(cls, mapping: Mapping[CanonicalCode, int]) -> "SubDeck":
        return cls(tuple(sorted(mapping.items())))

    @classmethod
    def full(cls, deck: EdgeDeck) -> "SubDeck":
        """The whole deck as a sub-deck."""
        return cls(tuple((c.code, c.multiplicity) for c in deck.classes))

    @property
    def size(self) -> int:
        return sum(k for _, k in self.counts)

    def as_dict(self) -> Dict[CanonicalCode, int]:
        return dict(self.counts)

    def contained_in(self, cards: Mapping[CanonicalCode, int]) -> bool:
        """True iff this sub-deck is multiset-contained in ``cards``."""
        return all(cards.get(code, 0) >= k for code, k in self.counts)

    def describe(self) -> str:
        return " + ".join(f"{code.decode('ascii')} x{k}" for code, k in self.counts)


def edge_deck(g: Graph) -> EdgeDeck:
    """Compute the edge-deck of g.

    Raises:
        EmptyGraph: If g has no edges
    """
    edges = g.edges()
    if not edges:
        raise EmptyGraph("the edge-deck of an edgeless graph is empty")
    groups: Dict[CanonicalCode, List[Tuple[Edge, Graph]]] = {}
    for e in edges:
        card = remove_edges(g, [e])
        groups.setdefault(canonical_form(card), []).append((e, card))

    classes = tuple(
        CardClass(
            code=code,
            multiplicity=len(members),
            representative_edge=members[0][0],
            card=members[0][1],
            edges=tuple(e for e, _ in members),
        )
        for code, members in sorted(groups.items())
    )
    logger.debug("edge deck of %s: %d card classes", g, len(classes))
    return EdgeDeck(host_order=g.order, host_edge_count=len(edges), classes=classes)


def is_removal_similar(g: Graph) -> bool:
    """True iff every edge-card of g is isomorphic to every other.

    Raises:
        EmptyGraph: If g has no edges
    """
    return len(edge_deck(g).classes) == 1


def check_subdeck(d: EdgeDeck, s: SubDeck) -> None:
    """Raise InvalidSubDeck unless s is a non-empty sub-multiset of d."""
    if not s.counts:
        raise InvalidSubDeck("a sub-deck needs at least one card")
    available = d.by_code()
    for code, k in s.counts:
        if k < 1:
            raise InvalidSubDeck(f"multiplicity {k} for card {code!r} is below 1")
        if code not in available:
            raise InvalidSubDeck(f"card {code!r} is not in the host deck")
        if k > available[code].multiplicity:
            raise InvalidSubDeck(
                f"card {code!r} requested {k} times, deck holds {available[code].multiplicity}"
            )


def enumerate_subdecks(d: EdgeDeck, k: int) -> Iterator[SubDeck]:
    """Yield every distinct size-k sub-deck of d exactly once.

    Count vectors run in descending lexicographic order over the classes
    (so all copies of the first class come first).

    Raises:
        SizeOutOfRange: If k < 1 or k exceeds the number of cards
    """
    if k < 1 or k > d.host_edge_count:
        raise SizeOutOfRange(f"sub-deck size {k} outside 1..{d.host_edge_count}")
    classes = d.classes
    capacity = [0] * (len(classes) + 1)
    for i in range(len(classes) - 1, -1, -1):
        capacity[i] = capacity[i + 1] + classes[i].multiplicity

    def counts_from(i: int, remaining: int) -> Iterator[Tuple[Tuple[CanonicalCode, int], ...]]:
        if remaining == 0:
            yield ()
            return
        if capacity[i] < remaining:
            return
        cls = classes[i]
        for c in range(min(cls.multiplicity, remaining), -1, -1):
            head = ((cls.code, c),) if c else ()
            for rest in counts_from(i + 1, remaining - c):
                yield head + rest

    for counts in counts_from(0, k):
        yield SubDeck(counts)
