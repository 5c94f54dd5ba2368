from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from models import SignedGraph
from utils.errors import InvalidGenerator, MethodNotApplicable, SizeLimitExceeded


class BaseGenerator(ABC):
    """Abstract base class for the SPC(k) construction methods.

    Every method emits SPC(k) on the canonical labels Z_2^k (positive edges
    x, x + e_i and negative edges x, x + J), so outputs of different methods
    compare by plain equality.
    """

    min_dim = 1

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}
        self._validate_config()

    def _validate_config(self):
        """Validate method-specific configuration."""
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the method name."""
        pass

    @abstractmethod
    def _build(self, k: int) -> SignedGraph:
        pass

    def applicable(self, k: int) -> bool:
        return k >= self.min_dim

    def generate(self, k: int) -> SignedGraph:
        """Build SPC(k) with this method."""
        if k < 1:
            raise InvalidGenerator(f"SPC(k) needs k >= 1, got {k}")
        max_dim = self.config.get('spc_max_dim', 16)
        if k > max_dim:
            raise SizeLimitExceeded(f"SPC({k}) exceeds the dimension cap {max_dim}")
        if not self.applicable(k):
            raise MethodNotApplicable(f"Method '{self.name}' needs k >= {self.min_dim}, got {k}")
        return self._build(k)
