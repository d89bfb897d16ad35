"""Tests for blockers, edge-reconstruction numbers and the sweep checks."""

import pytest

from _common.oracles import atlas_graphs, oracle_blockers, oracle_ern, to_nx
from swapdeck.config import BlockerUniverse
from swapdeck.core.graph import Graph
from swapdeck.core.iso import canonical_form
from swapdeck.deck import SubDeck, edge_deck, enumerate_subdecks
from swapdeck.errors import EmptyGraph, InvalidSubDeck, SizeOutOfRange
from swapdeck.families import FamilyKind, FamilySpec, build, complete
from swapdeck.recon import (
    BlockerCertificate,
    ErnVerdict,
    blockers_of,
    ern,
    swap2_label,
    verify_theorem1_sweep,
    verify_theorem2,
    verify_theorem7,
)


def _single(g: Graph, copies: int = 1) -> SubDeck:
    return SubDeck(((edge_deck(g).classes[0].code, copies),))


def _assert_blockers_match_oracle(g: Graph, max_size: int = 2) -> None:
    deck = edge_deck(g)
    cards = {cls.code: to_nx(cls.card) for cls in deck.classes}
    for size in range(1, min(max_size, g.edge_count) + 1):
        for s in enumerate_subdecks(deck, size):
            wanted = [(cards[code], k) for code, k in s.counts]
            for universe in BlockerUniverse:
                connected = universe is BlockerUniverse.CONNECTED_ONLY
                expected = sorted(canonical_form(h) for h in oracle_blockers(g, wanted, connected))
                found = [cert.blocker_code for cert in blockers_of(g, s, universe)]
                assert found == expected, (g, s.describe(), universe)


class TestBlockers:
    """Blocker enumeration and certificates."""

    def test_complete_graph_card_has_no_blocker(self, k4):
        assert blockers_of(k4, _single(k4)) == []

    def test_c5_card_is_blocked(self, c5):
        found = blockers_of(c5, _single(c5))
        assert found
        host = canonical_form(c5)
        assert all(cert.blocker_code != host for cert in found)
        assert [c.blocker_code for c in found] == sorted(c.blocker_code for c in found)
        assert all(cert.verify(c5) for cert in found)

    def test_cube_pair_is_blocked(self, q3):
        found = blockers_of(q3, _single(q3, 2))
        assert found
        assert all(cert.verify(q3) for cert in found)

    def test_claw_full_deck(self, claw):
        found = blockers_of(claw, SubDeck.full(edge_deck(claw)))
        assert len(found) == 1
        blocker = found[0].blocker
        assert sorted(blocker.degrees()) == [0, 2, 2, 2]
        assert blockers_of(claw, SubDeck.full(edge_deck(claw)), BlockerUniverse.CONNECTED_ONLY) == []

    def test_invalid_subdeck(self, c5):
        with pytest.raises(InvalidSubDeck):
            blockers_of(c5, _single(c5, 6))

    def test_certificate_rejects_host(self, c5):
        cert = BlockerCertificate(_single(c5), c5, canonical_form(c5))
        assert not cert.verify(c5)
        cert = BlockerCertificate(_single(c5), c5, b"bogus")
        assert not cert.verify(c5)

    def test_blocking_is_monotone(self):
        for g in atlas_graphs(max_order=5):
            if g.edge_count < 2:
                continue
            deck = edge_deck(g)
            for s in enumerate_subdecks(deck, 2):
                for cert in blockers_of(g, s):
                    for code, _ in s.counts:
                        assert BlockerCertificate(SubDeck(((code, 1),)), cert.blocker, cert.blocker_code).verify(g)


class TestBlockerOracle:
    """Blocker lists agree with the all-graphs search for every small sub-deck."""

    def test_graphs_on_five_vertices(self):
        for g in atlas_graphs(max_order=5):
            if g.edge_count:
                _assert_blockers_match_oracle(g)

    @pytest.mark.slow
    def test_graphs_on_six_vertices(self):
        for g in atlas_graphs(max_order=6):
            if g.order == 6 and 0 < g.edge_count <= 8:
                _assert_blockers_match_oracle(g)


class TestErn:
    """Edge-reconstruction numbers of known graphs."""

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_complete_graphs(self, n):
        result = ern(complete(n))
        assert result.verdict is ErnVerdict.EXACT
        assert result.value == 1

    def test_c5(self, c5):
        result = ern(c5, cap=3)
        assert result.render() == "3"
        assert result.witness_subdeck.size == 3

    def test_claw_is_not_reconstructable(self, claw):
        result = ern(claw)
        assert result.verdict is ErnVerdict.NOT_RECONSTRUCTABLE
        assert result.render() == "nr"
        assert result.lower_bound is None
        assert result.certificate.verify(claw)

    def test_claw_with_connected_blockers(self, claw):
        assert ern(claw, cap=3, universe=BlockerUniverse.CONNECTED_ONLY).render() == "3"

    def test_cube_exceeds_small_cap(self, q3):
        result = ern(q3, cap=2)
        assert result.verdict is ErnVerdict.EXCEEDS_CAP
        assert result.render() == ">2"
        assert result.lower_bound == 3

    @pytest.mark.slow
    def test_cube_at_least_three(self, q3):
        assert ern(q3, cap=4).lower_bound >= 3

    def test_errors(self, c5):
        with pytest.raises(EmptyGraph):
            ern(Graph.empty(4))
        with pytest.raises(SizeOutOfRange):
            ern(c5, cap=0)

    def test_to_dict(self, k4):
        out = ern(k4).to_dict()
        assert out["verdict"] == "exact"
        assert out["ern"] == "1"
        assert out["cap"] == 5
        assert list(out["witness_subdeck"].values()) == [1]

    def test_agrees_with_oracle_on_five_vertices(self):
        for g in atlas_graphs(max_order=5):
            if not g.edge_count:
                continue
            expected = oracle_ern(g, 3)
            result = ern(g, cap=3)
            if expected["nr"]:
                assert result.render() == "nr"
            elif expected["value"] is None:
                assert result.render() == ">3"
            else:
                assert result.render() == str(expected["value"])

    @pytest.mark.slow
    def test_agrees_with_oracle_on_six_vertices(self):
        for g in atlas_graphs(max_order=6):
            if g.order < 6 or not 0 < g.edge_count <= 8:
                continue
            expected = oracle_ern(g, 3)
            rendered = ern(g, cap=3).render()
            if expected["nr"]:
                assert rendered == "nr"
            else:
                assert rendered == (str(expected["value"]) if expected["value"] else ">3")


class TestTheoremChecks:
    """Removal-similar bound, sweep and family probes."""

    @pytest.mark.parametrize("fixture", ["q3", "c6"])
    def test_removal_similar_bound_holds(self, fixture, request):
        g = request.getfixturevalue(fixture)
        report = verify_theorem2(g)
        assert report.applicable
        assert report.all_blocked
        assert report.explicit_blocker is not None
        assert report.explicit_blocker.verify(g)
        assert report.holds

    def test_premise_failure_is_reported(self, prism):
        report = verify_theorem2(prism)
        assert report.regular
        assert not report.removal_similar
        assert not report.applicable
        assert report.holds

    def test_edgeless_premises(self):
        report = verify_theorem2(Graph.empty(3))
        assert not report.applicable

    def test_sweep_cells(self, q3, k4):
        report = verify_theorem1_sweep([q3, k4, Graph.empty(2)], cap=2)
        assert report.graphs == 3
        assert report.cells[(">2", "yes")] == 1
        assert report.cells[("1", "inf")] == 1
        assert report.cells[("-", "-")] == 1
        assert report.holds

    def test_sweep_cap(self, q3):
        with pytest.raises(SizeOutOfRange):
            verify_theorem1_sweep([q3], cap=1)

    def test_swap2_labels(self, k4, q3, p4):
        assert swap2_label(k4) == "inf"
        assert swap2_label(q3) == "yes"
        assert swap2_label(p4) == "yes"

    def test_sweep_small_connected_graphs(self):
        corpus = list(atlas_graphs(max_order=5, connected=True))
        report = verify_theorem1_sweep(corpus, cap=3)
        assert report.graphs == 31
        assert report.holds

    @pytest.mark.slow
    def test_sweep_connected_graphs_on_six_vertices(self):
        corpus = list(atlas_graphs(max_order=6, connected=True))
        assert len(corpus) == 143
        assert verify_theorem1_sweep(corpus, cap=3).holds

    @pytest.mark.parametrize(
        "kind,n",
        [(FamilyKind.KN_MINUS_MATCHING, 6), (FamilyKind.KNN_MINUS_MATCHING, 3)],
    )
    def test_family_probe_blocked_through_two(self, kind, n):
        report = verify_theorem7(build(FamilySpec(kind, n)))
        assert report.edge_transitive
        assert report.removal_similar
        assert report.two_swappable
        assert report.holds
        assert report.ern.lower_bound >= 3

    def test_family_probe_measures_orbits(self):
        report = verify_theorem7(build(FamilySpec(FamilyKind.KN_MINUS_HAMILTONIAN, 6)), ern_cap=2)
        assert report.edge_orbits == 2
        assert not report.edge_transitive
        assert report.regular_degree == 3
