from models import CayleySpec, SignedGraph
from .base_generator import BaseGenerator
from .operations import cayley_graph


class CayleyGenerator(BaseGenerator):
    """SPC(k) = (Z_2^k, {e_1, ..., e_k}, {J})."""

    @property
    def name(self) -> str:
        return "cayley"

    def _build(self, k: int) -> SignedGraph:
        return cayley_graph(CayleySpec.spc(k))
