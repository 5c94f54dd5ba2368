import pytest

from models import NEGATIVE, POSITIVE
from services.gallery_service import GF16_GENERATOR, cubic_residues, gf16_multiply, gf16_power
from utils.errors import InvalidGalleryArgs


class TestGf16:
    def test_generator_has_order_15(self):
        assert gf16_power(GF16_GENERATOR, 15) == 1
        assert all(gf16_power(GF16_GENERATOR, e) != 1 for e in range(1, 15))

    def test_multiplication_reduces(self):
        # x^3 * x = x^4 = x + 1
        assert gf16_multiply(0b1000, 0b0010) == 0b0011

    def test_cubic_residues(self):
        residues = cubic_residues()
        assert len(residues) == 5
        assert 1 in residues


class TestNamedGraphs:
    def test_kneser_is_petersen(self, gallery):
        kneser = gallery.kneser(5, 2)
        assert (kneser.n, kneser.edge_count) == (10, 15)
        assert gallery.isomorphic(kneser, gallery.petersen())

    def test_kneser_needs_n_at_least_2k(self, gallery):
        with pytest.raises(InvalidGalleryArgs):
            gallery.kneser(3, 2)

    def test_clebsch(self, gallery, construction):
        clebsch = gallery.clebsch()
        assert {clebsch.degree(v) for v in range(16)} == {5}
        assert gallery.isomorphic(clebsch, construction.spc(4))

    def test_gg16(self, gallery, construction):
        gg16 = gallery.gg16()
        assert (gg16.n, gg16.edge_count) == (16, 40)
        assert gallery.triangle_free(gg16)
        assert gallery.isomorphic(gg16, construction.spc(4))

    def test_ramsey_classes_partition_k16(self, gallery):
        classes = gallery.ramsey333_classes()
        pairs = [set(g.pairs) for g in classes]
        assert sum(len(p) for p in pairs) == 120
        assert len(set().union(*pairs)) == 120
        assert all(gallery.triangle_free(g) for g in classes)

    def test_schlafli_deletion_chain(self, gallery):
        schlafli = gallery.schlafli27()
        assert {schlafli.degree(v) for v in range(27)} == {10}
        chain = gallery.schlafli_deletion_chain()
        assert [g.n for g in chain] == [27, 16, 10, 6]
        assert gallery.isomorphic(chain[1], gallery.clebsch())
        assert gallery.isomorphic(chain[2], gallery.petersen())
        assert gallery.isomorphic(chain[3], gallery.positive_cycle(6))

    def test_k33_matching(self, gallery, graph_service):
        graph = gallery.k33_matching()
        assert graph.negative_edges == [(0, 3, NEGATIVE), (1, 4, NEGATIVE), (2, 5, NEGATIVE)]
        assert graph_service.negative_girth(graph) == 4

    def test_cycles(self, gallery, graph_service):
        assert graph_service.negative_girth(gallery.negative_cycle(5)) == 5
        assert gallery.positive_cycle(4).edges[0][2] == POSITIVE


class TestBuild:
    def test_build_with_arguments(self, gallery):
        assert gallery.build('kneser:5,2') == gallery.kneser(5, 2)
        assert gallery.build('Ramsey333:2') == gallery.ramsey333_class(2)
        assert gallery.build('ramsey333') == gallery.ramsey333_class(0)

    @pytest.mark.parametrize('name', ['nope', 'kneser:a,b', 'petersen:1', 'ramsey333:3', 'negative_cycle:1',
                                      'positive_cycle:2'])
    def test_bad_names(self, gallery, name):
        with pytest.raises(InvalidGalleryArgs):
            gallery.build(name)
