from fractions import Fraction

import networkx as nx
import pytest

from models import NEGATIVE, POSITIVE, CayleySpec, Homomorphism, SignedGraph, Switching
from utils.errors import BudgetExceeded, IncompleteMapping, PreconditionFailed, UnsupportedInput

from tests.helpers import brute_force_hom


class TestSearch:
    def test_negative_four_cycle_maps_to_spc3(self, hom_service, construction, c4_negative):
        target = construction.spc(3)
        result = hom_service.search(c4_negative, target)
        assert result.exists
        assert hom_service.verify_homomorphism(c4_negative, target, result.homomorphism) == (True, None)

    def test_girth_certificate(self, hom_service, construction):
        result = hom_service.search(construction.negative_cycle(3), construction.spc(3))
        assert not result.exists
        assert result.certificate.index == '11'
        assert result.to_dict()['status'] == 'certificate'

    def test_longer_cycle_maps_to_shorter(self, hom_service, construction):
        assert hom_service.search(construction.negative_cycle(6), construction.negative_cycle(4)).exists
        blocked = hom_service.search(construction.negative_cycle(4), construction.negative_cycle(6))
        assert blocked.certificate.index == '10'

    def test_switching_can_be_disabled(self, hom_service):
        negative_edge = SignedGraph(2, ((0, 1, NEGATIVE),))
        positive_edge = SignedGraph(2, ((0, 1, POSITIVE),))
        assert hom_service.search(negative_edge, positive_edge).exists
        assert not hom_service.search(negative_edge, positive_edge, allow_switching=False).exists

    def test_empty_source(self, hom_service, construction):
        result = hom_service.search(SignedGraph(0), construction.spc(2))
        assert result.homomorphism == Homomorphism(Switching(), ())

    def test_source_loop_needs_target_loop(self, hom_service, construction):
        looped = SignedGraph(1, ((0, 0, POSITIVE),))
        assert not hom_service.search(looped, construction.spc(2)).exists
        assert hom_service.search(looped, construction.spc_loop(2)).exists

    def test_agrees_with_brute_force(self, hom_service, construction):
        targets = [construction.spc(2), construction.negative_cycle(4), construction.spc_loop(1)]
        for seed in range(12):
            source = construction.random_signed_graph(4 + seed % 2, seed, edge_probability=0.6)
            for target in targets:
                result = hom_service.search(source, target)
                assert result.exists == brute_force_hom(source, target), (seed, target.to_dict())
                if result.exists:
                    assert hom_service.verify_homomorphism(source, target, result.homomorphism)[0]

    def test_deterministic_without_seed(self, hom_service, construction):
        source, target = construction.spc(4), construction.spc(2)
        assert hom_service.search(source, target).homomorphism == hom_service.search(source, target).homomorphism

    def test_seeded_witness_is_valid(self, hom_service, construction):
        source, target = construction.spc(4), construction.spc(2)
        hom = hom_service.find_homomorphism(source, target, seed=7)
        assert hom_service.verify_homomorphism(source, target, hom)[0]

    def test_budget(self, hom_service):
        k4 = SignedGraph.from_networkx(nx.complete_graph(4))
        k3 = SignedGraph.from_networkx(nx.complete_graph(3))
        with pytest.raises(BudgetExceeded):
            hom_service.search(k4, k3, budget=1, allow_switching=False)


class TestPinned:
    def test_pin_fixes_image(self, hom_service, construction, c4_negative):
        result = hom_service.search(c4_negative, construction.spc(3), pinned={0: 2 * 5})
        assert result.homomorphism.vmap[0] == 5
        assert 0 not in result.homomorphism.switching
        assert hom_service.verify_homomorphism(c4_negative, construction.spc(3), result.homomorphism)[0]

    def test_conflicting_pin_leaves_nothing(self, hom_service, construction, c4_negative):
        # the least vertex of a component is never switched
        assert not hom_service.search(c4_negative, construction.spc(3), pinned={0: 1}).exists


class TestVerify:
    def test_wrong_map(self, hom_service, construction, c4_negative):
        valid, diagnostic = hom_service.verify_homomorphism(
            c4_negative, construction.spc(2), Homomorphism(Switching(), (0, 0, 0, 0)))
        assert not valid
        assert 'edge' in diagnostic

    def test_incomplete_map(self, hom_service, construction, c4_negative):
        with pytest.raises(IncompleteMapping):
            hom_service.verify_homomorphism(c4_negative, construction.spc(2), Homomorphism(Switching(), (0, 1)))


class TestExplicitMaps:
    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_projection(self, hom_service, construction, k):
        hom = hom_service.spc_projection_hom(k)
        assert hom_service.verify_homomorphism(construction.spc(k + 2), construction.spc(k), hom) == (True, None)

    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_loop_contraction(self, hom_service, construction, k):
        hom = hom_service.loop_contraction_hom(k)
        assert hom_service.verify_homomorphism(construction.spc_loop(k + 1), construction.spc_loop(k), hom)[0]

    def test_composition(self, hom_service, construction):
        hom = hom_service.compose(hom_service.spc_projection_hom(3), hom_service.spc_projection_hom(1))
        assert hom_service.verify_homomorphism(construction.spc(5), construction.spc(1), hom)[0]

    def test_projection_needs_positive_k(self, hom_service):
        with pytest.raises(PreconditionFailed):
            hom_service.spc_projection_hom(0)


class TestInducedSpc:
    def test_spc3_host(self, hom_service, construction):
        embedding = hom_service.find_induced_spc(CayleySpec.spc(3))
        assert embedding.order == 3
        assert hom_service.verify_induced_spc(construction.spc(3), embedding)

    def test_host_with_extra_generator(self, hom_service, construction):
        # with e_1 + e_2 added, 3 + 4 + 8 + 15 is a negative 4-cycle and induces SPC(3)
        spec = CayleySpec(4, frozenset({1, 2, 4, 8, 3}), frozenset({15}))
        embedding = hom_service.find_induced_spc(spec, require_bipartite=False)
        assert embedding.order == 3
        host = construction.signed_cayley(spec)
        assert hom_service.verify_induced_spc(host, embedding)

    def test_non_bipartite_host(self, hom_service):
        with pytest.raises(PreconditionFailed):
            hom_service.find_induced_spc(CayleySpec.spc(2))
        embedding = hom_service.find_induced_spc(CayleySpec.spc(2), require_bipartite=False)
        assert embedding.order == 2

    def test_balanced_host(self, hom_service):
        with pytest.raises(PreconditionFailed):
            hom_service.find_induced_spc(CayleySpec(2, frozenset({1, 2})))


class TestUnderlyingInvariants:
    def test_chromatic_numbers(self, hom_service, gallery):
        assert hom_service.chromatic_number(gallery.petersen()) == 3
        assert hom_service.chromatic_number(SignedGraph.from_networkx(nx.complete_graph(4))) == 4

    def test_chromatic_number_rejects_loops(self, hom_service, construction):
        with pytest.raises(UnsupportedInput):
            hom_service.chromatic_number(construction.spc_loop(1))

    def test_independence_and_fractional(self, hom_service, gallery):
        petersen = gallery.petersen()
        assert hom_service.independence_number(petersen) == 4
        assert hom_service.fractional_chromatic_number_vt(petersen) == Fraction(5, 2)

    def test_fractional_needs_vertex_transitivity(self, hom_service):
        with pytest.raises(PreconditionFailed):
            hom_service.fractional_chromatic_number_vt(SignedGraph.from_networkx(nx.path_graph(3)))
