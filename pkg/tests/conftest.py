import pytest

from models import NEGATIVE, POSITIVE, SignedGraph
from services import (
    CircularService, ConstructionService, GalleryService, HomomorphismService, IsomorphismService,
    LiftService, PackingService, SignedGraphService, VerificationService
)
from utils import config_manager
from utils.config_manager import ConfigManager


@pytest.fixture
def config_manager_tmp(tmp_path, monkeypatch):
    """A ConfigManager backed by a temporary file, installed as the global instance."""
    manager = ConfigManager(tmp_path / 'config.json')
    monkeypatch.setattr(config_manager, '_config_instance', manager)
    return manager


@pytest.fixture
def config(config_manager_tmp):
    values = config_manager_tmp.get_all()
    values.update({'hom_budget': 10 ** 7, 'threads': 1})
    return values


@pytest.fixture
def graph_service():
    return SignedGraphService()


@pytest.fixture
def construction(config):
    return ConstructionService(config)


@pytest.fixture
def gallery():
    return GalleryService()


@pytest.fixture
def iso_service(config):
    return IsomorphismService(config['iso_max_vertices'])


@pytest.fixture
def hom_service(config):
    return HomomorphismService(config)


@pytest.fixture
def circular(config):
    return CircularService(config)


@pytest.fixture
def packing_service(config):
    return PackingService(config)


@pytest.fixture
def lift_service(config):
    return LiftService(config)


@pytest.fixture
def verification(config):
    return VerificationService(config)


@pytest.fixture
def c4_negative():
    """C_-4: cycle 0-1-2-3 with (0, 1) negative."""
    return SignedGraph(4, ((0, 1, NEGATIVE), (1, 2, POSITIVE), (2, 3, POSITIVE), (0, 3, POSITIVE)))


@pytest.fixture
def digon():
    return SignedGraph(2, ((0, 1, POSITIVE), (0, 1, NEGATIVE)))


@pytest.fixture
def k4_negative():
    return SignedGraph.from_pairs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], NEGATIVE)
