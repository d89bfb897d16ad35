"""Tests for edge-decks and sub-deck enumeration."""

import pytest
from hypothesis import given, settings

from _common.oracles import atlas_graphs, card_classes, count_vectors
from _common.strategies import graphs
from swapdeck.core.graph import Edge, Graph, remove_edges
from swapdeck.core.iso import canonical_form, edge_orbits
from swapdeck.deck import (
    SubDeck,
    check_subdeck,
    edge_deck,
    enumerate_subdecks,
    is_removal_similar,
)
from swapdeck.errors import EmptyGraph, InvalidSubDeck, SizeOutOfRange
from swapdeck.families import complete_bipartite


class TestEdgeDeck:
    """Card classes and multiplicities."""

    def test_c4_single_class(self, c4):
        deck = edge_deck(c4)
        assert len(deck.classes) == 1
        cls = deck.classes[0]
        assert cls.multiplicity == 4
        assert cls.representative_edge == Edge(0, 1)
        assert cls.code == canonical_form(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))

    def test_prism_two_classes(self, prism):
        deck = edge_deck(prism)
        assert sorted(c.multiplicity for c in deck.classes) == [3, 6]
        assert deck.host_edge_count == 9
        assert deck.host_order == 6

    def test_k4(self, k4):
        deck = edge_deck(k4)
        assert [c.multiplicity for c in deck.classes] == [6]
        assert deck.counter()[deck.classes[0].code] == 6

    def test_edgeless_rejected(self):
        with pytest.raises(EmptyGraph):
            edge_deck(Graph.empty(3))

    def test_class_lookup(self, p4):
        deck = edge_deck(p4)
        end = deck.class_of(Edge(0, 1))
        assert Edge(2, 3) in end.edges
        assert deck.class_of(Edge(1, 2)).multiplicity == 1
        assert deck.multiplicity(b"nope") == 0
        assert end.card == remove_edges(p4, [(0, 1)])
        with pytest.raises(KeyError):
            deck.class_of(Edge(0, 2))

    @settings(max_examples=500, deadline=None)
    @given(graphs(min_order=2, max_order=12, min_edges=1))
    def test_deck_size_identity(self, g):
        deck = edge_deck(g)
        assert sum(c.multiplicity for c in deck.classes) == g.edge_count
        assert sorted(e for c in deck.classes for e in c.edges) == g.edges()

    def test_matches_vf2_classes(self):
        for g in atlas_graphs(max_order=5):
            if g.edge_count:
                expected = sorted(k for _, k in card_classes(g))
                assert sorted(c.multiplicity for c in edge_deck(g).classes) == expected


class TestRemovalSimilarity:
    def test_examples(self, octahedron, prism):
        assert is_removal_similar(octahedron)
        assert not is_removal_similar(prism)
        assert is_removal_similar(complete_bipartite(1, 4))

    def test_edge_transitive_graphs_are_removal_similar(self):
        for g in atlas_graphs(max_order=6):
            if g.edge_count and len(edge_orbits(g)) == 1:
                assert is_removal_similar(g)


class TestSubDecks:
    """Validation and enumeration of sub-multisets."""

    def test_check_subdeck(self, prism):
        deck = edge_deck(prism)
        big, small = sorted(deck.classes, key=lambda c: -c.multiplicity)
        check_subdeck(deck, SubDeck.of({big.code: 6, small.code: 1}))
        check_subdeck(deck, SubDeck.full(deck))
        with pytest.raises(InvalidSubDeck):
            check_subdeck(deck, SubDeck.of({small.code: 4}))
        with pytest.raises(InvalidSubDeck):
            check_subdeck(deck, SubDeck.of({b"C~": 1}))
        with pytest.raises(InvalidSubDeck):
            check_subdeck(deck, SubDeck(()))
        with pytest.raises(InvalidSubDeck):
            check_subdeck(deck, SubDeck(((big.code, 0),)))

    def test_subdeck_helpers(self, c4):
        deck = edge_deck(c4)
        code = deck.classes[0].code
        s = SubDeck.of({code: 2})
        assert s.size == 2
        assert s.as_dict() == {code: 2}
        assert s.contained_in({code: 3})
        assert not s.contained_in({code: 1})
        assert s.describe() == f"{code.decode('ascii')} x2"
        assert SubDeck.full(deck).size == 4

    def test_prism_pairs(self, prism):
        deck = edge_deck(prism)
        subdecks = list(enumerate_subdecks(deck, 2))
        assert len(subdecks) == 3
        first = deck.classes[0]
        assert subdecks[0].counts == ((first.code, 2),)
        assert all(s.size == 2 for s in subdecks)

    def test_c4_pairs(self, c4):
        assert len(list(enumerate_subdecks(edge_deck(c4), 2))) == 1

    def test_size_range(self, k4):
        deck = edge_deck(k4)
        assert len(list(enumerate_subdecks(deck, 6))) == 1
        with pytest.raises(SizeOutOfRange):
            list(enumerate_subdecks(deck, 7))
        with pytest.raises(SizeOutOfRange):
            list(enumerate_subdecks(deck, 0))

    def test_counts_match_bounded_compositions(self):
        for g in atlas_graphs(max_order=5):
            if not g.edge_count:
                continue
            deck = edge_deck(g)
            mults = [c.multiplicity for c in deck.classes]
            for k in range(1, g.edge_count + 1):
                produced = list(enumerate_subdecks(deck, k))
                assert len(produced) == sum(1 for _ in count_vectors(mults, k))
                assert len(set(produced)) == len(produced)
                for s in produced:
                    check_subdeck(deck, s)
