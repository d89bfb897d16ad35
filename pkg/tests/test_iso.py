"""Tests for canonical labeling, isomorphism and edge orbits."""

import networkx as nx
import pytest
from hypothesis import given, settings

from _common.oracles import atlas_graphs, brute_edge_orbits, brute_isomorphic, to_nx
from _common.strategies import graph_and_permutation, graph_pairs, graphs
from swapdeck.codec import decode
from swapdeck.core.graph import Edge, Graph, complement
from swapdeck.core.iso import (
    are_isomorphic,
    automorphism_mapping_edge,
    canonical_cache_stats,
    canonical_form,
    canonical_labeling,
    clear_canonical_cache,
    edge_orbits,
)
from swapdeck.families import FamilyKind, FamilySpec, build, cycle, generate


class TestCanonicalForm:
    """Equal codes exactly for isomorphic graphs."""

    @settings(max_examples=300)
    @given(graph_and_permutation(max_order=10))
    def test_invariant_under_relabeling(self, pair):
        g, perm = pair
        assert canonical_form(g) == canonical_form(g.permute(perm))

    @settings(max_examples=300)
    @given(graphs(max_order=6), graphs(max_order=6))
    def test_matches_brute_force(self, g, h):
        assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)

    def test_atlas_classes_are_distinct(self):
        codes = [canonical_form(g) for g in atlas_graphs(max_order=6)]
        assert len(codes) == len(set(codes))

    @pytest.mark.slow
    def test_atlas_classes_on_seven_vertices(self):
        codes = [canonical_form(g) for g in atlas_graphs(max_order=7)]
        assert len(codes) == len(set(codes)) == 1252

    def test_code_is_graph6_of_the_relabeling(self, q3):
        labeling = canonical_labeling(q3)
        assert decode(labeling.code.decode("ascii")) == q3.permute(labeling.images)
        assert [labeling.images[v] for v in labeling.order] == list(range(8))

    def test_colored_codes(self, c4):
        plain = canonical_form(c4)
        assert canonical_form(c4, [1, 0, 0, 0]) == canonical_form(c4, [0, 0, 1, 0])
        assert canonical_form(c4, [1, 1, 0, 0]) != canonical_form(c4, [1, 0, 1, 0])
        assert canonical_form(c4, [1, 0, 0, 0]) != plain

    def test_color_length_checked(self, c4):
        with pytest.raises(ValueError):
            canonical_form(c4, [0, 1])

    def test_symmetric_large_families(self):
        for spec in (
            FamilySpec(FamilyKind.KN_MINUS_MATCHING, 16),
            FamilySpec(FamilyKind.KNN_MINUS_MATCHING, 8),
            FamilySpec(FamilyKind.HYPERCUBE, 4),
        ):
            g = generate(spec)
            shifted = g.permute(tuple((v + 5) % g.order for v in range(g.order)))
            assert canonical_form(g) == canonical_form(shifted)


class TestAreIsomorphic:
    def test_path_relabeled(self, p4):
        other = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        vmap = are_isomorphic(p4, other)
        assert vmap is not None
        assert p4.permute(vmap) == other

    def test_claw_versus_path(self, claw, p4):
        assert are_isomorphic(claw, p4) is None

    def test_c5_is_self_complementary(self, c5):
        assert are_isomorphic(c5, complement(c5)) is not None

    def test_cube_is_crown_on_eight(self, q3):
        assert are_isomorphic(q3, generate(FamilySpec(FamilyKind.KNN_MINUS_MATCHING, 4))) is not None

    def test_c6_versus_two_triangles(self, c6):
        triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert are_isomorphic(c6, triangles) is None

    def test_order_mismatch(self, k4):
        assert are_isomorphic(k4, Graph.empty(5)) is None

    @settings(max_examples=200)
    @given(graphs(max_order=8), graphs(max_order=8))
    def test_agrees_with_vf2(self, g, h):
        assert (are_isomorphic(g, h) is not None) == nx.is_isomorphic(to_nx(g), to_nx(h))

    @settings(max_examples=1000, deadline=None)
    @given(graph_pairs(max_order=7))
    def test_agrees_with_all_permutations(self, pair):
        g, h = pair
        vmap = are_isomorphic(g, h)
        assert (vmap is not None) == brute_isomorphic(g, h)
        if vmap is not None:
            assert g.permute(vmap) == h


class TestEdgeOrbits:
    """Orbits of edges under automorphisms."""

    def test_edge_transitive(self, c6, q3, k4):
        for g in (c6, q3, k4):
            assert len(edge_orbits(g)) == 1

    def test_prism_has_two_orbits(self, prism):
        orbits = edge_orbits(prism)
        assert sorted(len(o) for o in orbits) == [3, 6]

    def test_path(self, p4):
        assert edge_orbits(p4) == [[Edge(0, 1), Edge(2, 3)], [Edge(1, 2)]]

    def test_matches_brute_force(self):
        for g in atlas_graphs(max_order=6):
            if g.edge_count:
                assert edge_orbits(g) == brute_edge_orbits(g)

    def test_automorphism_mapping_edge(self, prism):
        for orbit in edge_orbits(prism):
            e = orbit[0]
            for f in orbit:
                sigma = automorphism_mapping_edge(prism, e, f)
                assert sigma is not None
                assert prism.permute(sigma) == prism
                assert Edge.of(sigma[e.u], sigma[e.v]) == f
        first, second = edge_orbits(prism)
        assert automorphism_mapping_edge(prism, first[0], second[0]) is None

    def test_complement_of_nine_cycle(self):
        g = build(FamilySpec(FamilyKind.KN_MINUS_HAMILTONIAN, 9)).graph
        assert len(edge_orbits(g)) == 3


class TestCache:
    def test_hits_and_clear(self):
        clear_canonical_cache()
        g = cycle(7)
        canonical_form(g)
        canonical_form(g)
        stats = canonical_cache_stats()
        assert stats["misses"] == 1
        assert stats["hits"] == 1
        assert stats["entries"] == 1
        clear_canonical_cache()
        assert canonical_cache_stats() == {"entries": 0, "hits": 0, "misses": 0}
