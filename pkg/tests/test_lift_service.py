import pytest

from models import GirthProfile, Switching
from utils.errors import NotACut, NotAPartition, PreconditionFailed
from services import lift_service as lift_service_module
from utils.file_manager import FileManager


@pytest.fixture
def singleton_packing(packing_service, c4_negative):
    """Each edge of C_-4 is the single negative edge of its own signature."""
    return packing_service.packing_from_negative_sets(c4_negative, [{i} for i in range(4)])


class TestContraction:
    def test_contracting_one_edge(self, lift_service, c4_negative, singleton_packing):
        contraction, signatures = lift_service.contract_packing_class(c4_negative, singleton_packing, 3)
        assert contraction.n == 3
        assert len(contraction.edges) == 3
        assert sorted(signatures) == [0, 1, 2]
        # edge 3 is (2, 3); its endpoints merge
        assert contraction.projection[2] == contraction.projection[3]

    def test_reduced_contraction_is_a_negative_triangle(self, lift_service, construction, iso_service,
                                                        c4_negative, singleton_packing):
        contraction, _ = lift_service.contract_packing_class(c4_negative, singleton_packing, 3)
        reduced = contraction.reduce(singleton_packing.negative_sets[0])
        assert iso_service.switching_isomorphic(reduced, construction.negative_cycle(3)) is not None

    def test_needs_a_partition(self, lift_service, packing_service, c4_negative):
        partial = packing_service.packing_from_negative_sets(c4_negative, [{0}, {2}])
        with pytest.raises(NotAPartition):
            lift_service.contract_packing_class(c4_negative, partial, 0)

    def test_index_out_of_range(self, lift_service, c4_negative, singleton_packing):
        with pytest.raises(PreconditionFailed):
            lift_service.contract_packing_class(c4_negative, singleton_packing, 4)


class TestSeparatingCut:
    def test_two_edges_at_a_vertex(self, lift_service, c4_negative):
        # edges 0 = (0, 1) and 2 = (1, 2) are exactly the edges at vertex 1
        assert lift_service.separating_cut(c4_negative, {0}, {2}) == Switching.of([0, 2, 3])

    def test_overlap(self, lift_service, c4_negative):
        with pytest.raises(NotACut):
            lift_service.separating_cut(c4_negative, {0}, {0})

    def test_not_a_cut(self, lift_service, c4_negative):
        with pytest.raises(NotACut):
            lift_service.separating_cut(c4_negative, {0}, set())


class TestLift:
    def test_singleton_classes_lift(self, lift_service, hom_service, construction, c4_negative, singleton_packing):
        instance = lift_service.build_instance(c4_negative, singleton_packing, 3, construction.spc(2))
        assert instance.reference_index == 0
        hom = lift_service.lift_to_edc(instance)
        target = construction.edc(construction.spc(2))
        assert hom_service.verify_homomorphism(c4_negative, target, hom) == (True, None)
        assert hom.switching == singleton_packing.cuts[3]

    def test_bound_must_accept_the_contraction(self, lift_service, construction, c4_negative, singleton_packing):
        with pytest.raises(PreconditionFailed):
            lift_service.build_instance(c4_negative, singleton_packing, 3, construction.negative_cycle(5))

    def test_pipeline_on_fixtures(self, lift_service, hom_service, construction):
        target = construction.edc(construction.spc(2))
        fixtures = FileManager(export_dir='.').load_fixtures('lift')
        assert fixtures
        for name, graph in fixtures:
            instance, hom = lift_service.lift_pipeline(graph)
            assert instance.index == 3
            assert hom_service.verify_homomorphism(graph, target, hom)[0], name

    def test_pipeline_needs_a_map_to_spc(self, lift_service, construction):
        with pytest.raises(PreconditionFailed):
            lift_service.lift_pipeline(construction.negative_cycle(3))

    def test_instance_serializes(self, lift_service, construction, c4_negative, singleton_packing):
        instance = lift_service.build_instance(c4_negative, singleton_packing, 3, construction.spc(2))
        data = instance.to_dict()
        assert data['index'] == 3
        assert data['contraction']['n'] == 3


def test_suite_instances(lift_service, graph_service):
    instances = lift_service.suite_instances()
    assert instances
    for graph in instances:
        assert graph_service.is_planar(graph)
        assert graph_service.girth_profile(graph) == GirthProfile.of_negative_cycle(4)


def test_suite_instances_fall_back_to_generated_quadrangulations(lift_service, construction, monkeypatch):
    class NoFixtures:
        def __init__(self, export_dir=None):
            pass

        def load_fixtures(self, category):
            return []

    monkeypatch.setattr(lift_service_module, 'FileManager', NoFixtures)
    graphs = lift_service.suite_instances(max_n=6, count=3, seed=1)
    assert graphs == construction.planar_quadrangulation_suite(6, 3, 1)
