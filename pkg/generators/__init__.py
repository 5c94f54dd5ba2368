from typing import Any, Dict, Optional

from models import SpcMethod
from utils.errors import MethodNotApplicable
from .base_generator import BaseGenerator
from .cayley_generator import CayleyGenerator
from .projection_generator import ProjectionGenerator
from .augmented_generator import AugmentedGenerator
from .power_generator import PowerGenerator
from .poset_generator import PosetGenerator
from .edc_generator import EdcGenerator
from .product_generator import ProductGenerator

__all__ = [
    'BaseGenerator',
    'CayleyGenerator',
    'ProjectionGenerator',
    'AugmentedGenerator',
    'PowerGenerator',
    'PosetGenerator',
    'EdcGenerator',
    'ProductGenerator',
    'get_generator'
]


def get_generator(method, config: Optional[Dict[str, Any]] = None) -> BaseGenerator:
    """Factory function to get the construction method for a name or SpcMethod."""
    if isinstance(method, str):
        method = SpcMethod.parse(method)

    generators = {
        'cayley': CayleyGenerator,
        'projection': ProjectionGenerator,
        'augmented': AugmentedGenerator,
        'power': PowerGenerator,
        'poset': PosetGenerator,
        'edc': EdcGenerator,
        'product': ProductGenerator
    }

    generator_class = generators.get(method.kind)
    if not generator_class:
        raise MethodNotApplicable(f"Unknown construction method: {method.kind}")

    if generator_class is ProductGenerator:
        return ProductGenerator(config, split=method.split)
    return generator_class(config)
