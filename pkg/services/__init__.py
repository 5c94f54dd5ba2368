from .signed_graph_service import SignedGraphService
from .isomorphism_service import IsomorphismService
from .construction_service import ConstructionService
from .gallery_service import GalleryService
from .homomorphism_service import HomomorphismService
from .circular_service import CircularService
from .packing_service import PackingService
from .lift_service import LiftService
from .verification_service import VerificationService
from .export_service import ExportService

__all__ = [
    'SignedGraphService', 'IsomorphismService', 'ConstructionService', 'GalleryService',
    'HomomorphismService', 'CircularService', 'PackingService', 'LiftService',
    'VerificationService', 'ExportService'
]
