"""Blockers and edge-reconstruction numbers.

A blocker of a sub-deck S of G's edge-deck is a graph H not isomorphic to
G whose own edge-deck contains S. Every such H has a card of S as one of
its edge-cards, so it is that card plus one non-edge: blockers are found by
expanding one representative card and filtering by deck containment.

The edge-reconstruction number ern(G) is the size of the smallest sub-deck
with no blocker.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple

from tqdm import tqdm

from .codec import encode
from .config import BlockerUniverse
from .core.graph import Graph, add_edges, is_connected, replace_edges, structural_report
from .core.iso import CanonicalCode, canonical_form, edge_orbits
from .deck import CardClass, EdgeDeck, SubDeck, check_subdeck, edge_deck, enumerate_subdecks
from .errors import EmptyGraph, SizeOutOfRange
from .families import FamilyInstance
from .swap import SwapWitness, is_k_swappable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockerCertificate:
    """A graph that blocks a sub-deck.

    Attributes:
        subdeck: The blocked sub-deck
        blocker: A graph not isomorphic to the host whose deck contains subdeck
        blocker_code: Canonical code of blocker
    """

    subdeck: SubDeck
    blocker: Graph
    blocker_code: CanonicalCode

    def verify(self, host: Graph) -> bool:
        """Recompute the blocker's deck and re-check both certificate clauses."""
        if canonical_form(self.blocker) != self.blocker_code:
            return False
        if self.blocker_code == canonical_form(host):
            return False
        if self.blocker.edge_count != host.edge_count or self.blocker.order != host.order:
            return False
        return self.subdeck.contained_in(edge_deck(self.blocker).counter())


class _Candidate:
    """A possible blocker: a representative card plus one non-edge."""

    def __init__(self, graph: Graph, code: CanonicalCode):
        self.graph = graph
        self.code = code

    @cached_property
    def cards(self) -> Counter:
        return edge_deck(self.graph).counter()


class _BlockerSearch:
    """Blocker queries against one host, sharing candidate pools across sub-decks."""

    def __init__(self, g: Graph, universe: BlockerUniverse):
        self.g = g
        self.universe = universe
        self.deck: EdgeDeck = edge_deck(g)
        self.host_code = canonical_form(g)
        self._pools: Dict[CanonicalCode, List[_Candidate]] = {}

    def pool(self, cls: CardClass) -> List[_Candidate]:
        if cls.code not in self._pools:
            seen = set()
            candidates = []
            for f in cls.card.non_edges():
                h = add_edges(cls.card, [f])
                code = canonical_form(h)
                if code == self.host_code or code in seen:
                    continue
                seen.add(code)
                if self.universe is BlockerUniverse.CONNECTED_ONLY and not is_connected(h):
                    continue
                candidates.append(_Candidate(h, code))
            candidates.sort(key=lambda c: c.code)
            self._pools[cls.code] = candidates
            logger.debug("blocker pool for card %s: %d candidates", cls.code, len(candidates))
        return self._pools[cls.code]

    def _first_class(self, s: SubDeck) -> CardClass:
        check_subdeck(self.deck, s)
        return self.deck.by_code()[s.counts[0][0]]

    def blockers(self, s: SubDeck) -> List[BlockerCertificate]:
        return [
            BlockerCertificate(s, c.graph, c.code)
            for c in self.pool(self._first_class(s))
            if s.contained_in(c.cards)
        ]

    def first_blocker(self, s: SubDeck) -> Optional[BlockerCertificate]:
        for c in self.pool(self._first_class(s)):
            if s.contained_in(c.cards):
                return BlockerCertificate(s, c.graph, c.code)
        return None


def blockers_of(
    g: Graph,
    s: SubDeck,
    universe: BlockerUniverse = BlockerUniverse.ALL_SIMPLE,
) -> List[BlockerCertificate]:
    """List every blocker of s up to isomorphism, sorted by canonical code.

    Raises:
        EmptyGraph: If g has no edges
        InvalidSubDeck: If s is empty or not a sub-multiset of g's edge-deck
    """
    return _BlockerSearch(g, universe).blockers(s)


class ErnVerdict(Enum):
    EXACT = "exact"
    NOT_RECONSTRUCTABLE = "nr"      # the full deck has a blocker
    EXCEEDS_CAP = "exceeds-cap"     # every sub-deck up to the cap is blocked


@dataclass(frozen=True)
class ErnResult:
    """Outcome of an edge-reconstruction-number computation."""

    verdict: ErnVerdict
    cap: int
    value: Optional[int] = None
    witness_subdeck: Optional[SubDeck] = None
    certificate: Optional[BlockerCertificate] = None

    @property
    def lower_bound(self) -> Optional[int]:
        """Proven lower bound on ern, or None when ern is undefined."""
        if self.verdict is ErnVerdict.EXACT:
            return self.value
        if self.verdict is ErnVerdict.EXCEEDS_CAP:
            return self.cap + 1
        return None

    def render(self) -> str:
        if self.verdict is ErnVerdict.EXACT:
            return str(self.value)
        if self.verdict is ErnVerdict.EXCEEDS_CAP:
            return f">{self.cap}"
        return "nr"

    def to_dict(self) -> Dict:
        out: Dict = {"verdict": self.verdict.value, "ern": self.render(), "cap": self.cap}
        if self.witness_subdeck is not None:
            out["witness_subdeck"] = {
                code.decode("ascii"): k for code, k in self.witness_subdeck.counts
            }
        if self.certificate is not None:
            out["blocker"] = encode(self.certificate.blocker)
        return out


def _ern(search: _BlockerSearch, cap: int) -> ErnResult:
    deck = search.deck
    full = search.first_blocker(SubDeck.full(deck))
    if full is not None:
        return ErnResult(ErnVerdict.NOT_RECONSTRUCTABLE, cap, certificate=full)
    for k in range(1, min(cap, deck.host_edge_count) + 1):
        logger.debug("ern of %s: trying sub-decks of size %d", search.g, k)
        for s in enumerate_subdecks(deck, k):
            if search.first_blocker(s) is None:
                return ErnResult(ErnVerdict.EXACT, cap, value=k, witness_subdeck=s)
    return ErnResult(ErnVerdict.EXCEEDS_CAP, cap)


def ern(
    g: Graph,
    cap: int = 5,
    universe: BlockerUniverse = BlockerUniverse.ALL_SIMPLE,
) -> ErnResult:
    """Compute the edge-reconstruction number of g, trying sub-decks up to cap.

    Args:
        g: Graph with at least one edge
        cap: Largest sub-deck size tried
        universe: Which graphs may act as blockers

    Returns:
        ErnResult: NOT_RECONSTRUCTABLE with a certificate when the full deck
        has a blocker; EXACT with the first unblocked sub-deck of the least
        size; otherwise EXCEEDS_CAP

    Raises:
        EmptyGraph: If g has no edges
        SizeOutOfRange: If cap < 1
    """
    if g.edge_count == 0:
        raise EmptyGraph("ern needs at least one edge")
    if cap < 1:
        raise SizeOutOfRange(f"ern cap must be >= 1 (got {cap})")
    return _ern(_BlockerSearch(g, universe), cap)


def _blocked_through(search: _BlockerSearch, size: int) -> Tuple[bool, Optional[SubDeck], List[BlockerCertificate]]:
    """Check that every sub-deck of size 1..size has a blocker."""
    certificates = []
    for k in range(1, min(size, search.deck.host_edge_count) + 1):
        for s in enumerate_subdecks(search.deck, k):
            cert = search.first_blocker(s)
            if cert is None:
                return False, s, certificates
            certificates.append(cert)
    return True, None, certificates


@dataclass
class Theorem2Report:
    """Premises and conclusion of the removal-similar ern >= 3 check."""

    regular: bool
    two_swappable: bool
    removal_similar: bool
    all_blocked: Optional[bool] = None
    unblocked: Optional[SubDeck] = None
    certificates: List[BlockerCertificate] = field(default_factory=list)
    explicit_blocker: Optional[BlockerCertificate] = None

    @property
    def applicable(self) -> bool:
        return self.regular and self.two_swappable and self.removal_similar

    @property
    def holds(self) -> bool:
        """True when the premises fail or the conclusion was confirmed."""
        if not self.applicable:
            return True
        return bool(self.all_blocked) and self.explicit_blocker is not None


def _explicit_blocker(search: _BlockerSearch, witness: SwapWitness, s: SubDeck) -> Optional[BlockerCertificate]:
    # H = G - e + b for each non-edge b of a 2-swap of e
    e = witness.removed[0]
    for b in witness.added:
        h = replace_edges(search.g, [e], [b])
        code = canonical_form(h)
        if code != search.host_code and s.contained_in(edge_deck(h).counter()):
            return BlockerCertificate(s, h, code)
    return None


def verify_theorem2(
    g: Graph,
    universe: BlockerUniverse = BlockerUniverse.ALL_SIMPLE,
) -> Theorem2Report:
    """Check whether regular, 2-swappable, removal-similar g has ern >= 3.

    Premise failures are reported, never raised. When all premises hold,
    every sub-deck of size 1 and 2 must have a blocker, and a blocker of the
    form ``G - e + e'`` is built from a 2-swap of e.
    """
    m = g.edge_count
    regular = structural_report(g).is_regular
    if m == 0:
        return Theorem2Report(regular=regular, two_swappable=False, removal_similar=False)
    witnesses = is_k_swappable(g, 2)
    search = _BlockerSearch(g, universe)
    report = Theorem2Report(
        regular=regular,
        two_swappable=witnesses is not None,
        removal_similar=len(search.deck.classes) == 1,
    )
    if not report.applicable or witnesses is None:
        return report

    report.all_blocked, report.unblocked, report.certificates = _blocked_through(search, 2)
    if m >= 2:
        pair = SubDeck(((search.deck.classes[0].code, 2),))
        witness = next((w for w in witnesses.values() if w.size == 2), None)
        explicit = _explicit_blocker(search, witness, pair) if witness is not None else None
        report.explicit_blocker = explicit or search.first_blocker(pair)
    return report


@dataclass
class SweepReport:
    """Cells keyed by (ern rendering, 2-swap label) plus counterexamples."""

    cells: Counter = field(default_factory=Counter)
    counterexamples: List[Graph] = field(default_factory=list)
    graphs: int = 0

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def swap2_label(g: Graph) -> str:
    """Label 2-swappability "yes" or "no", or "inf" when the complement is empty."""
    if not g.non_edges():
        return "inf"
    return "yes" if is_k_swappable(g, 2) is not None else "no"


def ern_at_least_three(result: ErnResult) -> bool:
    bound = result.lower_bound
    return bound is not None and bound >= 3


def verify_theorem1_sweep(
    corpus: Iterable[Graph],
    cap: int = 3,
    universe: BlockerUniverse = BlockerUniverse.ALL_SIMPLE,
    progress: bool = False,
) -> SweepReport:
    """Sweep a corpus for graphs with ern >= 3 that are not 2-swappable.

    Args:
        corpus: Graphs to check; edgeless graphs land in the ("-", "-") cell
        cap: ern cap; must be >= 2 to decide ern >= 3
        universe: Which graphs may act as blockers
        progress: Show a progress bar on stderr

    Raises:
        SizeOutOfRange: If cap < 2
    """
    if cap < 2:
        raise SizeOutOfRange("an ern cap below 2 cannot decide ern >= 3")
    report = SweepReport()
    for g in tqdm(corpus, desc="sweep", unit="graph", disable=not progress):
        report.graphs += 1
        if g.edge_count == 0:
            report.cells[("-", "-")] += 1
            continue
        result = ern(g, cap, universe)
        label = swap2_label(g)
        report.cells[(result.render(), label)] += 1
        if ern_at_least_three(result) and label != "yes":
            logger.warning("counterexample: %s has ern %s but is not 2-swappable", g, result.render())
            report.counterexamples.append(g)
    return report


@dataclass
class Theorem7Report:
    """Facts about one family instance bearing on ern >= 3."""

    description: str
    regular_degree: Optional[int]
    connected: bool
    removal_similar: bool
    edge_orbits: int
    two_swappable: bool
    blocked_through_two: bool
    unblocked: Optional[SubDeck]
    ern: ErnResult

    @property
    def edge_transitive(self) -> bool:
        return self.edge_orbits == 1

    @property
    def holds(self) -> bool:
        return self.blocked_through_two


def verify_theorem7(
    instance: FamilyInstance,
    universe: BlockerUniverse = BlockerUniverse.ALL_SIMPLE,
    ern_cap: int = 3,
) -> Theorem7Report:
    """Exhaustively check that every sub-deck of size <= 2 has a blocker.

    Edge-transitivity is measured from exact automorphism orbits, not
    assumed.
    """
    g = instance.graph
    search = _BlockerSearch(g, universe)
    blocked, unblocked, _ = _blocked_through(search, 2)
    info = structural_report(g)
    report = Theorem7Report(
        description=instance.spec.describe(),
        regular_degree=info.regular_degree,
        connected=info.is_connected,
        removal_similar=len(search.deck.classes) == 1,
        edge_orbits=len(edge_orbits(g)),
        two_swappable=is_k_swappable(g, 2) is not None,
        blocked_through_two=blocked,
        unblocked=unblocked,
        ern=_ern(search, ern_cap),
    )
    logger.info("%s: blocked through 2 = %s, ern %s", report.description, blocked, report.ern.render())
    return report
