import networkx as nx
import pytest

from models import NEGATIVE, POSITIVE, SignedGraph
from services.isomorphism_service import IsomorphismService, fibered_double_cover
from utils.errors import SizeLimitExceeded

from tests.helpers import switched


def test_fibered_cover_size(c4_negative):
    cover = fibered_double_cover(c4_negative)
    assert cover.number_of_nodes() == 8
    assert cover.number_of_edges() == 4 + 2 * 4


def test_switched_relabelled_copy_is_found(iso_service, c4_negative):
    relabel = (2, 0, 3, 1)
    other = switched(c4_negative, [1, 2]).relabel(relabel)
    witness = iso_service.switching_isomorphic(c4_negative, other)
    assert witness is not None
    assert iso_service.verify_switching_isomorphism(c4_negative, other, witness)


def test_balanced_and_unbalanced_cycles_differ(iso_service, c4_negative):
    positive = SignedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert iso_service.switching_isomorphic(c4_negative, positive) is None


def test_parity_of_negative_edges_decides_c6(iso_service):
    # one or three negative edges on C6: both cycles are negative
    one = SignedGraph(6, tuple((i, (i + 1) % 6, NEGATIVE if i == 0 else POSITIVE) for i in range(6)))
    three = SignedGraph(6, tuple((i, (i + 1) % 6, NEGATIVE if i % 2 == 0 else POSITIVE) for i in range(6)))
    assert iso_service.switching_isomorphic(one, three) is not None
    balanced = one.with_all_signs(POSITIVE)
    assert iso_service.switching_isomorphic(one, balanced) is None


def test_spc3_equals_its_switched_copies(iso_service, construction):
    spc3 = construction.spc(3)
    other = switched(spc3, [1, 4, 6]).relabel((7, 6, 5, 4, 3, 2, 1, 0))
    assert iso_service.switching_isomorphic(spc3, other) is not None


def test_size_limit():
    service = IsomorphismService(max_vertices=4)
    big = SignedGraph.from_networkx(nx.path_graph(5))
    with pytest.raises(SizeLimitExceeded):
        service.switching_isomorphic(big, big)


def test_vertex_transitivity(iso_service, gallery):
    assert iso_service.is_vertex_transitive(gallery.petersen())
    assert not iso_service.is_vertex_transitive(SignedGraph.from_networkx(nx.path_graph(3)))
