import networkx as nx
import pytest

from models import INF, Homomorphism, SignaturePacking, SignedGraph, Switching
from utils.errors import InvalidHomomorphism, PreconditionFailed, SizeLimitExceeded
from utils.file_manager import FileManager


class TestOracle:
    def test_odd_edges_of_four_cycle(self, packing_service, c4_negative):
        assert packing_service.odd_edges_of_negative_cycle(c4_negative) == [0, 1, 2, 3]

    def test_four_cycle_packs(self, packing_service, c4_negative):
        value, witness = packing_service.packing_number_oracle(c4_negative)
        assert value == 4
        assert witness.is_disjoint() and witness.is_partition()

    def test_digon(self, packing_service, digon):
        value, witness = packing_service.packing_number_oracle(digon)
        assert value == 2
        assert witness.size == 2

    def test_all_negative_k4(self, packing_service, k4_negative):
        value, _ = packing_service.packing_number_oracle(k4_negative)
        assert value == 3

    def test_balanced_graph_is_infinite(self, packing_service):
        path = SignedGraph.from_networkx(nx.path_graph(4))
        value, witness = packing_service.packing_number_oracle(path)
        assert value == INF
        assert witness.negative_sets == (frozenset(),)

    def test_size_limit(self, packing_service):
        with pytest.raises(SizeLimitExceeded):
            packing_service.packing_number_oracle(SignedGraph.from_networkx(nx.cycle_graph(13)))


class TestHomomorphismRoute:
    def test_packing_number(self, packing_service, c4_negative, digon, k4_negative):
        assert packing_service.packing_number(c4_negative) == 4
        assert packing_service.packing_number(digon) == 2
        assert packing_service.packing_number(k4_negative) == 3

    def test_balanced(self, packing_service):
        assert packing_service.packing_number(SignedGraph.from_networkx(nx.cycle_graph(5))) == INF

    def test_agrees_with_oracle_on_small_atlas(self, packing_service):
        for graph in packing_service.atlas_instances(4):
            value, _ = packing_service.packing_number_oracle(graph)
            assert packing_service.packing_number(graph) == value, graph.to_dict()

    @pytest.mark.slow
    def test_agrees_with_oracle_on_seeded_graphs(self, packing_service, construction):
        for seed in range(60):
            graph = construction.random_signed_graph(7, seed, edge_probability=0.35, connected=True)
            value, _ = packing_service.packing_number_oracle(graph)
            assert packing_service.packing_number(graph) == value, seed


class TestSignatures:
    def test_pull_back_through_spc3(self, packing_service, hom_service, construction, c4_negative):
        hom = hom_service.find_homomorphism(c4_negative, construction.spc(3))
        packing = packing_service.hom_to_signatures(c4_negative, hom, 3)
        assert packing.size == 4
        assert packing.is_partition()

    def test_pull_back_of_projection(self, packing_service, hom_service, construction):
        packing = packing_service.hom_to_signatures(construction.spc(4), hom_service.spc_projection_hom(2), 2)
        assert packing.size == 3 and packing.is_partition()

    def test_pull_back_rejects_invalid_map(self, packing_service, c4_negative):
        with pytest.raises(InvalidHomomorphism):
            packing_service.hom_to_signatures(c4_negative, Homomorphism(Switching(), (0, 0, 0, 0)), 3)

    def test_packing_to_homomorphism(self, packing_service, hom_service, construction, c4_negative):
        _, witness = packing_service.packing_number_oracle(c4_negative)
        hom = packing_service.packing_to_homomorphism(c4_negative, witness)
        assert hom_service.verify_homomorphism(c4_negative, construction.spc_loop(3), hom) == (True, None)

    def test_partial_packing_lands_on_loops(self, packing_service, hom_service, construction, c4_negative):
        packing = packing_service.packing_from_negative_sets(c4_negative, [{0}, {2}])
        hom = packing_service.packing_to_homomorphism(c4_negative, packing)
        assert hom_service.verify_homomorphism(c4_negative, construction.spc_loop(1), hom)[0]

    def test_packing_to_homomorphism_preconditions(self, packing_service, c4_negative):
        with pytest.raises(PreconditionFailed):
            packing_service.packing_to_homomorphism(c4_negative, SignaturePacking(c4_negative, (Switching(),)))
        overlapping = SignaturePacking(c4_negative, (Switching(), Switching()))
        with pytest.raises(PreconditionFailed):
            packing_service.packing_to_homomorphism(c4_negative, overlapping)

    def test_negative_sets_must_be_equivalent(self, packing_service, c4_negative):
        with pytest.raises(PreconditionFailed):
            packing_service.packing_from_negative_sets(c4_negative, [{1, 2}])


class TestInstances:
    def test_signature_classes(self, packing_service):
        assert len(list(packing_service.signature_classes(nx.cycle_graph(4)))) == 2
        assert len(list(packing_service.signature_classes(nx.complete_graph(4)))) == 8

    def test_atlas_up_to_three_vertices(self, packing_service):
        # vertex, edge, path, and the triangle with either sign class
        assert len(list(packing_service.atlas_instances(3))) == 5

    def test_planar_fixtures_pack(self, packing_service):
        fixtures = FileManager(export_dir='.').load_fixtures('packing')
        assert fixtures
        for name, graph in fixtures:
            assert packing_service.packs(graph), name
