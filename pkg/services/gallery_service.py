import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from generators.operations import cayley_graph, negative_cycle
from models import NEGATIVE, POSITIVE, CayleySpec, SignedGraph
from services.signed_graph_service import SignedGraphService
from utils.errors import InvalidGalleryArgs

logger = logging.getLogger(__name__)

# GF(16) = Z_2[x]/(x^4 + x + 1); elements are 4-bit polynomials
GF16_MODULUS = 0b10011
GF16_GENERATOR = 0b0010


def gf16_multiply(a: int, b: int) -> int:
    product = 0
    while b:
        if b & 1:
            product ^= a
        b >>= 1
        a <<= 1
        if a & 0b10000:
            a ^= GF16_MODULUS
    return product


def gf16_power(a: int, exponent: int) -> int:
    result = 1
    for _ in range(exponent):
        result = gf16_multiply(result, a)
    return result


def cubic_residues() -> frozenset:
    """The nonzero cubes of GF(16): {1, x^3, x^3+x^2, x^3+x, x^3+x^2+x+1}."""
    return frozenset(gf16_power(a, 3) for a in range(1, 16))


class GalleryService:
    """Named graphs: Kneser graphs, Petersen, Clebsch, the GF(16) construction,
    the Schläfli graph and the small signed graphs used as bounds."""

    NAMES = ('kneser', 'petersen', 'clebsch', 'gg16', 'ramsey333', 'schlafli27',
             'k33_matching', 'negative_cycle', 'positive_cycle')

    def __init__(self):
        self.graph_service = SignedGraphService()

    def build(self, name: str) -> SignedGraph:
        """Build a gallery graph from 'name' or 'name:arg1,arg2' (e.g. 'kneser:5,2')."""
        key, _, raw_args = name.strip().lower().partition(':')
        try:
            args = [int(a) for a in raw_args.split(',')] if raw_args else []
        except ValueError:
            raise InvalidGalleryArgs(f"Gallery arguments must be integers, got {raw_args!r}")

        builders: Dict[str, Tuple[Callable[..., SignedGraph], Tuple[int, ...]]] = {
            'kneser': (self.kneser, (2,)),
            'petersen': (self.petersen, (0,)),
            'clebsch': (self.clebsch, (0,)),
            'gg16': (self.gg16, (0,)),
            'ramsey333': (self.ramsey333_class, (0, 1)),
            'schlafli27': (self.schlafli27, (0,)),
            'k33_matching': (self.k33_matching, (0,)),
            'negative_cycle': (self.negative_cycle, (1,)),
            'positive_cycle': (self.positive_cycle, (1,)),
        }
        if key not in builders:
            raise InvalidGalleryArgs(f"Unknown gallery graph: {key}")
        builder, arities = builders[key]
        if len(args) not in arities:
            raise InvalidGalleryArgs(f"{key} takes {' or '.join(map(str, arities))} arguments, got {len(args)}")
        return builder(*args)

    def kneser(self, n: int, k: int) -> SignedGraph:
        """K(n, k): k-subsets of {0..n-1}, adjacent when disjoint; vertices in lexicographic order."""
        if k < 1 or n < 2 * k:
            raise InvalidGalleryArgs(f"Kneser graph needs k >= 1 and n >= 2k, got K({n}, {k})")
        subsets = [frozenset(c) for c in combinations(range(n), k)]
        pairs = [(i, j) for i, j in combinations(range(len(subsets)), 2)
                 if not subsets[i] & subsets[j]]
        return SignedGraph.from_pairs(len(subsets), pairs)

    def petersen(self) -> SignedGraph:
        return SignedGraph.from_networkx(nx.petersen_graph())

    def clebsch(self) -> SignedGraph:
        """The folded 5-cube: PC(4) with every edge positive."""
        spec = CayleySpec(4, frozenset([1, 2, 4, 8, 15]))
        return cayley_graph(spec)

    def gg16(self) -> SignedGraph:
        """GF(16), adjacent when the difference is a cubic residue."""
        return cayley_graph(CayleySpec(4, cubic_residues()))

    def ramsey333_classes(self) -> List[SignedGraph]:
        """The 3-edge-colouring of K16 by the multiplicative cosets x^c R of the cubic residues."""
        residues = cubic_residues()
        classes = []
        for c in range(3):
            shift = gf16_power(GF16_GENERATOR, c)
            coset = frozenset(gf16_multiply(shift, r) for r in residues)
            classes.append(cayley_graph(CayleySpec(4, coset)))
        return classes

    def ramsey333_class(self, color: int = 0) -> SignedGraph:
        if color not in (0, 1, 2):
            raise InvalidGalleryArgs(f"ramsey333 has colours 0, 1, 2, got {color}")
        return self.ramsey333_classes()[color]

    @staticmethod
    def schlafli_labels() -> List[Tuple[str, Tuple[int, ...]]]:
        """Indices 0..5 are a_1..a_6, 6..11 are b_1..b_6, 12..26 are c_ij (i < j)."""
        labels = [('a', (i,)) for i in range(6)]
        labels += [('b', (i,)) for i in range(6)]
        labels += [('c', pair) for pair in combinations(range(6), 2)]
        return labels

    def schlafli27(self) -> SignedGraph:
        """Intersection graph of the 27 lines in the double-six model."""
        labels = self.schlafli_labels()

        def meets(first, second) -> bool:
            (kind_a, a), (kind_b, b) = sorted((first, second))
            if kind_a == kind_b == 'c':
                return not set(a) & set(b)
            if kind_a == 'a' and kind_b == 'b':
                return a[0] != b[0]
            if kind_a in ('a', 'b') and kind_b == 'c':
                return a[0] in b
            return False

        pairs = [(i, j) for i, j in combinations(range(27), 2) if meets(labels[i], labels[j])]
        return SignedGraph.from_pairs(27, pairs)

    def schlafli_deletion_chain(self) -> List[SignedGraph]:
        """27 -> 16 -> 10 -> 6: repeatedly delete the closed neighbourhood of vertex 0."""
        chain = [self.schlafli27()]
        while len(chain) < 4:
            graph = chain[-1]
            closed = {0} | {w for w in range(graph.n) if w != 0 and (
                graph.has_edge(0, w, POSITIVE) or graph.has_edge(0, w, NEGATIVE))}
            chain.append(graph.induced_subgraph([w for w in range(graph.n) if w not in closed]))
        logger.debug("deletion chain orders: %s", [g.n for g in chain])
        return chain

    def k33_matching(self) -> SignedGraph:
        """(K_{3,3}, M): parts {0,1,2} and {3,4,5}, the matching i -- i+3 negative."""
        return SignedGraph(6, tuple(
            (i, 3 + j, NEGATIVE if i == j else POSITIVE) for i in range(3) for j in range(3)))

    def negative_cycle(self, length: int) -> SignedGraph:
        if length < 2:
            raise InvalidGalleryArgs(f"negative_cycle needs length >= 2, got {length}")
        return negative_cycle(length)

    def positive_cycle(self, length: int) -> SignedGraph:
        if length < 3:
            raise InvalidGalleryArgs(f"positive_cycle needs length >= 3, got {length}")
        return SignedGraph.from_networkx(nx.cycle_graph(length))

    def isomorphic(self, first: SignedGraph, second: SignedGraph) -> bool:
        return nx.is_isomorphic(first.to_networkx(), second.to_networkx())

    def triangle_free(self, graph: SignedGraph) -> bool:
        return sum(nx.triangles(graph.to_networkx()).values()) == 0
