import logging
import random
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Union

import networkx as nx

from generators import get_generator
from generators.operations import (
    cayley_graph, common_product, extended_double_cover, negative_cycle, power_graph
)
from models import (
    NEGATIVE, POSITIVE, CayleySpec, GirthProfile, PcDistance, PosetVertex, SignedGraph, SpcMethod
)
from services.signed_graph_service import SignedGraphService
from utils.config_manager import get_config
from utils.errors import (
    InvalidGenerator, InvalidSubset, PreconditionFailed, SizeLimitExceeded, UnsupportedInput
)
from utils.file_manager import write_sgraph

logger = logging.getLogger(__name__)


class ConstructionService:
    """Builds signed Cayley graphs, SPC(k) by every method, EDC, products and quotients."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else get_config().get_all()
        self.graph_service = SignedGraphService()

    def signed_cayley(self, spec: CayleySpec) -> SignedGraph:
        max_dim = self.config.get('cayley_max_dim', 20)
        if spec.dim > max_dim:
            raise SizeLimitExceeded(f"Cayley graph on Z_2^{spec.dim} exceeds the cap 2^{max_dim}")
        return cayley_graph(spec)

    def spc(self, k: int, method: Union[str, SpcMethod] = 'cayley') -> SignedGraph:
        generator = get_generator(method, self.config)
        graph = generator.generate(k)
        logger.debug("built SPC(%d) by %s: %d vertices, %d edges",
                     k, generator.name, graph.n, graph.edge_count)
        return graph

    def spc_loop(self, k: int) -> SignedGraph:
        """SPC°(k): SPC(k) with a positive loop at every vertex."""
        if k < 1:
            raise InvalidGenerator(f"SPC°(k) needs k >= 1, got {k}")
        return self.signed_cayley(CayleySpec.spc_loop(k))

    def edc(self, graph: SignedGraph) -> SignedGraph:
        return extended_double_cover(graph)

    def common_product(self, first: SignedGraph, second: SignedGraph) -> SignedGraph:
        return common_product(first, second)

    def power_graph(self, graph: SignedGraph) -> SignedGraph:
        return power_graph(graph)

    def components(self, graph: SignedGraph) -> List[SignedGraph]:
        """Connected components as graphs, vertices relabelled in increasing order."""
        return [graph.induced_subgraph(c) for c in self.graph_service.connected_components(graph)]

    @staticmethod
    def quotient_map(s: int) -> Callable[[int], int]:
        """Linear map Z_2^n -> Z_2^(n-1) with kernel {0, s}.

        XOR s away when the lowest set bit t of s is set, then delete coordinate t.
        """
        t = (s & -s).bit_length() - 1
        low = (1 << t) - 1

        def compress(x: int) -> int:
            if x >> t & 1:
                x ^= s
            return (x & low) | ((x >> (t + 1)) << t)

        return compress

    def contract_label_spec(self, spec: CayleySpec, s: int) -> CayleySpec:
        """Quotient Cayley spec for x ~ x + s; s itself becomes the loop generator 0."""
        if s == 0 or s not in spec.splus:
            raise InvalidGenerator(f"{s} is not a nonzero positive generator of the Cayley graph")
        compress = self.quotient_map(s)
        return CayleySpec(
            spec.dim - 1,
            frozenset(compress(g) for g in spec.splus),
            frozenset(compress(g) for g in spec.sminus)
        )

    def contract_label(self, spec: CayleySpec, s: int) -> SignedGraph:
        """Identify x with x + s; same-sign multi-edges collapse and every vertex gets a positive loop."""
        return self.signed_cayley(self.contract_label_spec(spec, s))

    def cycle_star_product(self, graph: nx.Graph) -> nx.Graph:
        """C*G: a 4-cycle (u,1)(u,2)(u,3)(u,4) per vertex, and per edge uv the edges
        (u,1)(v,3), (u,2)(v,4), (u,3)(v,1), (u,4)(v,2). Vertex (u, i) is 4u + i - 1."""
        if nx.number_of_selfloops(graph):
            raise UnsupportedInput("C*G needs a loopless graph")
        index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        label = lambda u, i: 4 * index[u] + i - 1
        product = nx.Graph()
        product.add_nodes_from(range(4 * len(index)))
        for u in graph.nodes():
            product.add_edges_from((label(u, i), label(u, i % 4 + 1)) for i in range(1, 5))
        for u, v in graph.edges():
            for i, j in ((1, 3), (2, 4), (3, 1), (4, 2)):
                product.add_edge(label(u, i), label(v, j))
        return product

    # Poset view of PC(k)

    def _poset_vertex(self, subset: Iterable[int], k: int) -> PosetVertex:
        return PosetVertex.from_subset(subset, k)

    def pc_distance(self, first: Iterable[int], second: Iterable[int], k: int) -> PcDistance:
        """Distance in PC(k) with the shortest positive and negative path lengths in SPC(k).

        The path flipping the elements of A xor B has that length and is
        negative iff it flips the negative element k; the other path goes to
        the complement of B.
        """
        first, second = frozenset(first), frozenset(second)
        a = self._poset_vertex(first, k)
        b = self._poset_vertex(second, k)
        difference = first ^ second
        d = len(difference)
        direct_negative = k in difference
        other = k + 1 - d
        positive, negative = (other, d) if direct_negative else (d, other)
        logger.debug("pc_distance %s %s in PC(%d): %d/%d", a.subset, b.subset, k, positive, negative)
        return PcDistance(min(d, other), positive, negative)

    def _smaller_member(self, label: int, k: int, size: int) -> FrozenSet[int]:
        vertex = PosetVertex.from_label(label, k)
        return vertex.subset if len(vertex.subset) == size else vertex.complement

    def layer_union(self, k: int, subset: Iterable[int], i: int) -> FrozenSet[int]:
        """Union of the vertices at distance i from the empty set and |B| - i from B."""
        b = frozenset(subset)
        if any(not 0 <= x <= k for x in b):
            raise InvalidSubset(f"Subset {sorted(b)} is not inside the ground set 0..{k}")
        if 2 * len(b) >= k + 1:
            raise PreconditionFailed(f"Layer union needs |B| < |complement of B|, got |B| = {len(b)}")
        if not 1 <= i < len(b):
            raise PreconditionFailed(f"Layer union needs 1 <= i < |B| = {len(b)}, got {i}")
        graph = self.spc(k, 'poset')
        from_empty = self.graph_service.distances(graph, 0)
        from_b = self.graph_service.distances(graph, PosetVertex.from_subset(b, k).label)
        union = frozenset()
        for w in range(graph.n):
            if from_empty[w] == i and from_b[w] == len(b) - i:
                union |= self._smaller_member(w, k, i)
        return union

    def two_component_split(self, k: int, subset: Iterable[int]) -> List[Dict[int, FrozenSet[int]]]:
        """For odd k and |B| = (k+1)/2: per component of the internal geodesic vertices
        between the empty set and B, the union of the vertices at each distance i."""
        b = frozenset(subset)
        if k % 2 == 0 or 2 * len(b) != k + 1:
            raise PreconditionFailed(f"Two-component split needs odd k and |B| = (k+1)/2, got k={k}, |B|={len(b)}")
        half = (k + 1) // 2
        graph = self.spc(k, 'poset')
        from_empty = self.graph_service.distances(graph, 0)
        from_b = self.graph_service.distances(graph, PosetVertex.from_subset(b, k).label)
        internal = [w for w in range(graph.n)
                    if 0 < from_empty[w] < half and from_empty[w] + from_b[w] == half]
        inner = graph.induced_subgraph(internal)
        splits = []
        for component in self.graph_service.connected_components(inner):
            layers: Dict[int, FrozenSet[int]] = {}
            for position in component:
                w = internal[position]
                i = from_empty[w]
                layers[i] = layers.get(i, frozenset()) | self._smaller_member(w, k, i)
            splits.append(layers)
        return splits

    def middle_layer(self, k: int) -> List[int]:
        """Labels of the pairs {A, complement} with |A| = k/2 in PC(k), k even."""
        if k % 2:
            raise PreconditionFailed(f"Middle layer needs even k, got {k}")
        half = k // 2
        return [x for x in range(1 << k) if bin(x).count('1') in (half, half + 1)]

    # Seeded instance generators

    def random_signed_graph(self, n: int, seed: int, edge_probability: float = 0.5,
                            negative_probability: float = 0.5, digon_probability: float = 0.0,
                            connected: bool = False) -> SignedGraph:
        rng = random.Random(seed)
        underlying = nx.gnp_random_graph(n, edge_probability, seed=rng)
        if connected:
            for v in range(1, n):
                underlying.add_edge(rng.randrange(v), v)
        edges = []
        for u, v in sorted(underlying.edges()):
            sign = NEGATIVE if rng.random() < negative_probability else POSITIVE
            edges.append((u, v, sign))
            if rng.random() < digon_probability:
                edges.append((u, v, POSITIVE if sign == NEGATIVE else NEGATIVE))
        return SignedGraph.simplified(n, edges)

    def planar_quadrangulation_suite(self, max_n: int = 8, count: int = 12,
                                     seed: int = 0) -> List[SignedGraph]:
        """Unbalanced planar bipartite signed graphs grown by gluing 4-faces onto a 4-cycle.

        Every bounded face is a 4-cycle, so each instance is bipartite and any
        unbalanced signature has negative girth 4.
        """
        if max_n < 4:
            raise PreconditionFailed(f"Quadrangulations need at least 4 vertices, got {max_n}")
        rng = random.Random(seed)
        suite, seen = [], set()
        attempts = 0
        while len(suite) < count and attempts < 50 * count:
            attempts += 1
            pairs = self._glue_faces(rng, rng.randint(4, max_n))
            edges = [(u, v, NEGATIVE if rng.random() < 0.5 else POSITIVE) for u, v in pairs]
            graph = SignedGraph(1 + max(max(p) for p in pairs), tuple(edges))
            if self.graph_service.girth_profile(graph) != GirthProfile.of_negative_cycle(4):
                continue
            key = write_sgraph(graph)
            if key not in seen:
                seen.add(key)
                suite.append(graph)
        logger.info("planar quadrangulation suite: %d instances after %d attempts", len(suite), attempts)
        return suite

    @staticmethod
    def _glue_faces(rng: random.Random, target: int) -> List[tuple]:
        outer = [0, 1, 2, 3]
        pairs = [(0, 1), (1, 2), (2, 3), (0, 3)]
        n = 4
        while n < target:
            i = rng.randrange(len(outer))
            if target - n >= 2 and rng.random() < 0.5:
                left, right = outer[i], outer[(i + 1) % len(outer)]
                a, b = n, n + 1
                pairs.extend([(left, a), (a, b), (b, right)])
                outer[i + 1:i + 1] = [a, b]
                n += 2
            else:
                left, right = outer[i], outer[(i + 2) % len(outer)]
                c = n
                pairs.extend([(left, c), (c, right)])
                outer[(i + 1) % len(outer)] = c
                n += 1
        return [tuple(sorted(p)) for p in pairs]

    def negative_cycle(self, length: int) -> SignedGraph:
        if length < 2:
            raise InvalidGenerator(f"A negative cycle needs length >= 2, got {length}")
        return negative_cycle(length)
