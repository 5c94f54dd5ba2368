from typing import Optional, Tuple

from models import SignedGraph
from utils.errors import MethodNotApplicable
from .base_generator import BaseGenerator
from .cayley_generator import CayleyGenerator
from .operations import common_product


class ProductGenerator(BaseGenerator):
    """SPC(a + b) = SPC(a) o SPC(b); label (x, u) -> x + u * 2^a."""

    min_dim = 2

    def __init__(self, config=None, split: Optional[Tuple[int, int]] = None):
        self.split = split
        super().__init__(config)

    def _validate_config(self):
        if self.split is not None and min(self.split) < 1:
            raise MethodNotApplicable(f"Product split needs a, b >= 1, got {self.split}")

    @property
    def name(self) -> str:
        return "product"

    def _build(self, k: int) -> SignedGraph:
        if self.split is None:
            a = k // 2
            b = k - a
        else:
            a, b = self.split
            if a + b != k:
                raise MethodNotApplicable(f"Product split {a}+{b} does not add up to {k}")
        factors = CayleyGenerator(self.config)
        return common_product(factors.generate(a), factors.generate(b))
