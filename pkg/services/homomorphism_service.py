import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor, as_completed
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from models.girth import PROFILE_INDICES
from models import (
    INF, NEGATIVE, POSITIVE, CayleySpec, HomSearchResult, Homomorphism, InducedEmbedding,
    NoHomCertificate, SignedGraph, Switching, all_ones, iter_bits
)
from services.construction_service import ConstructionService
from services.hom_solver import HomomorphismSolver, search_from_root, split_states
from services.isomorphism_service import IsomorphismService
from services.signed_graph_service import SignedGraphService
from utils.config_manager import get_config
from utils.errors import (
    BudgetExceeded, IncompleteMapping, InvariantViolation, PreconditionFailed, UnsupportedInput
)

logger = logging.getLogger(__name__)


class HomomorphismService:
    """Decides and builds signed graph homomorphisms."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else get_config().get_all()
        self.graph_service = SignedGraphService()
        self.construction_service = ConstructionService(self.config)

    # Decision

    def no_hom_certificate(self, source: SignedGraph, target: SignedGraph) -> Optional[NoHomCertificate]:
        """First index ij with g_ij(source) < g_ij(target); a homomorphism never shortens closed walks."""
        source_profile = self.graph_service.girth_profile(source)
        target_profile = self.graph_service.girth_profile(target)
        for index in PROFILE_INDICES:
            ours, theirs = source_profile.value(index), target_profile.value(index)
            if ours < theirs:
                return NoHomCertificate(index, ours, theirs)
        return None

    def search(self, source: SignedGraph, target: SignedGraph, budget: Optional[int] = None,
               threads: Optional[int] = None, seed: Optional[int] = None,
               allow_switching: bool = True,
               pinned: Optional[Dict[int, int]] = None) -> HomSearchResult:
        """
        Decide whether source maps to target.

        Args:
            source: Graph to map
            target: Graph mapped into
            budget: Node budget, defaults to the hom_budget config value
            threads: Worker processes splitting the first vertex's candidates
            seed: Shuffle candidate order with this seed instead of ascending order
            allow_switching: False restricts to sign-preserving maps of the unswitched source
            pinned: Source vertex -> solver state (2x + b) it must take

        Returns:
            HomSearchResult with a homomorphism, a certificate, or neither

        Raises:
            BudgetExceeded: When the search runs out of nodes before deciding
        """
        budget = budget if budget is not None else self.config.get('hom_budget', 10 ** 8)
        threads = threads if threads is not None else self.config.get('threads', 1)

        if allow_switching:
            certificate = self.no_hom_certificate(source, target)
            if certificate is not None:
                logger.debug("no homomorphism: g_%s %s < %s", certificate.index,
                             certificate.source_value, certificate.target_value)
                return HomSearchResult(certificate=certificate)
        if source.n == 0:
            return HomSearchResult(homomorphism=Homomorphism(Switching(), ()))

        solver = HomomorphismSolver(source, target, budget, allow_switching, seed)
        domains = solver.initial_domains(self.graph_service.connected_components(source))
        for v, state in (pinned or {}).items():
            domains[v] &= 1 << state
        if threads > 1:
            states, nodes = self._parallel_search(source, target, domains, budget, allow_switching, seed, threads)
        else:
            states = solver.solve(domains)
            nodes = solver.nodes

        if states is None:
            return HomSearchResult(nodes=nodes)
        vmap, switched = split_states(states)
        return HomSearchResult(homomorphism=Homomorphism(Switching(switched), vmap), nodes=nodes)

    def _parallel_search(self, source, target, domains, budget, allow_switching, seed, threads):
        # split on the widest domain; pinned vertices have a single candidate
        root = max(range(source.n), key=lambda v: (domains[v].bit_count(), -v))
        candidates = list(iter_bits(domains[root]))
        nodes, exhausted = 0, False
        with ProcessPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(search_from_root, source, target, domains, root, state,
                                       budget, allow_switching, seed) for state in candidates]
            for future in as_completed(futures):
                states, used, ran_out = future.result()
                nodes += used
                exhausted = exhausted or ran_out
                if states is not None:
                    for other in futures:
                        other.cancel()
                    return states, nodes
        if exhausted:
            raise BudgetExceeded(f"A worker exceeded its budget of {budget} nodes", nodes)
        return None, nodes

    def find_homomorphism(self, source: SignedGraph, target: SignedGraph, **options) -> Optional[Homomorphism]:
        return self.search(source, target, **options).homomorphism

    def verify_homomorphism(self, source: SignedGraph, target: SignedGraph,
                            hom: Homomorphism) -> Tuple[bool, Optional[str]]:
        """Check every switched source edge lands on a target edge of the same sign."""
        if len(hom.vmap) != source.n:
            raise IncompleteMapping(f"vmap has {len(hom.vmap)} entries, source has {source.n} vertices")
        for v, image in enumerate(hom.vmap):
            if not isinstance(image, int) or not 0 <= image < target.n:
                raise IncompleteMapping(f"vertex {v} has no image in 0..{target.n - 1}")
        switched = self.graph_service.switch(source, hom.switching)
        for u, v, sign in switched.edges:
            x, y = hom.vmap[u], hom.vmap[v]
            if not target.has_edge(x, y, sign):
                return False, f"edge ({u}, {v}, {sign}) maps to ({x}, {y}), which is not a {sign} edge of the target"
        return True, None

    # Explicit homomorphisms

    def spc_projection_hom(self, k: int) -> Homomorphism:
        """SPC(k+2) -> SPC(k).

        Switch the vertices whose first two coordinates differ, making e_1, e_2
        and J negative, then keep the last k coordinates, adding J when the
        first two coordinates are 01 or 10.
        """
        if k < 1:
            raise PreconditionFailed(f"Projection needs k >= 1, got {k}")
        J = all_ones(k)
        vmap, switched = [], set()
        for x in range(1 << (k + 2)):
            odd = (x ^ (x >> 1)) & 1
            if odd:
                switched.add(x)
            vmap.append((x >> 2) ^ (J if odd else 0))
        return Homomorphism(Switching(frozenset(switched)), tuple(vmap))

    def loop_contraction_hom(self, k: int) -> Homomorphism:
        """SPC°(k+1) -> SPC°(k): drop the last coordinate; e_{k+1} edges land on loops."""
        if k < 1:
            raise PreconditionFailed(f"Loop contraction needs k >= 1, got {k}")
        J = all_ones(k)
        return Homomorphism(Switching(), tuple(x & J for x in range(1 << (k + 1))))

    def compose(self, first: Homomorphism, second: Homomorphism) -> Homomorphism:
        """second after first: switch at X1 xor first^{-1}(X2), map by vmap2 o vmap1."""
        pulled = frozenset(v for v, x in enumerate(first.vmap) if x in second.switching)
        return Homomorphism(
            first.switching.symmetric_difference(Switching(pulled)),
            tuple(second.vmap[x] for x in first.vmap)
        )

    # Induced SPC extraction

    def _shortest_negative_walk(self, spec: CayleySpec) -> List[Tuple[int, str]]:
        """Generators with signs along a shortest negative closed walk from 0 in the Cayley graph."""
        steps = [(g, POSITIVE) for g in sorted(spec.splus) if g] + [(g, NEGATIVE) for g in sorted(spec.sminus)]
        start, goal = (0, 0), (0, 1)
        parent = {start: None}
        queue = deque([start])
        while queue and goal not in parent:
            x, parity = queue.popleft()
            for g, sign in steps:
                state = (x ^ g, parity ^ (sign == NEGATIVE))
                if state not in parent:
                    parent[state] = ((x, parity), (g, sign))
                    queue.append(state)
        if goal not in parent:
            return []
        walk = []
        state = goal
        while parent[state] is not None:
            state, step = parent[state]
            walk.append(step)
        walk.reverse()
        return walk

    def find_induced_spc(self, spec: CayleySpec, require_bipartite: bool = True) -> InducedEmbedding:
        """
        Extract SPC(m) induced in an unbalanced binary Cayley graph.

        A shortest negative closed walk from 0 of length L gives generators
        f_1..f_L with a negative f_L; the subset sums of f_1..f_{L-1} induce
        SPC(L-1), switched at the sums that use an odd number of the other
        negative generators. Signed-bipartite hosts have even L.
        """
        host = self.construction_service.signed_cayley(spec)
        profile = self.graph_service.girth_profile(host)
        if profile.negative_girth == INF:
            raise PreconditionFailed("Host is balanced; there is no negative cycle to extract from")
        if require_bipartite and not (profile.g01 == INF and profile.g11 == INF):
            raise PreconditionFailed("Host is not signed bipartite")

        walk = self._shortest_negative_walk(spec)
        last = max(i for i, (_, sign) in enumerate(walk) if sign == NEGATIVE)
        walk = walk[:last] + walk[last + 1:] + [walk[last]]
        order = len(walk) - 1
        generators = [g for g, _ in walk]
        odd_negatives = sum(1 << i for i, (_, sign) in enumerate(walk[:order]) if sign == NEGATIVE)

        vertices, switched = [], set()
        for subset in range(1 << order):
            point = 0
            for i in iter_bits(subset):
                point ^= generators[i]
            vertices.append(point)
            if (subset & odd_negatives).bit_count() % 2:
                switched.add(subset)
        embedding = InducedEmbedding(order, tuple(vertices), Switching(frozenset(switched)), tuple(generators))

        if not self.verify_induced_spc(host, embedding):
            raise InvariantViolation(f"Extracted vertex set does not induce SPC({order})")
        logger.debug("induced SPC(%d) found on generators %s", order, generators)
        return embedding

    def verify_induced_spc(self, host: SignedGraph, embedding: InducedEmbedding) -> bool:
        if len(set(embedding.vertices)) != 1 << embedding.order:
            return False
        induced = host.induced_subgraph(embedding.vertices)
        expected = self.construction_service.spc(embedding.order)
        return self.graph_service.switch(induced, embedding.switching) == expected

    # Analysis helpers on the underlying graph

    def chromatic_number(self, graph: SignedGraph) -> int:
        """Chromatic number of the underlying graph, as the least k with a map to K_k."""
        if graph.loops:
            raise UnsupportedInput("A graph with loops has no proper colouring")
        underlying = SignedGraph.from_networkx(graph.to_networkx())
        if underlying.edge_count == 0:
            return min(1, graph.n)
        k = max(len(c) for c in nx.find_cliques(underlying.to_networkx()))
        while True:
            clique = SignedGraph.from_networkx(nx.complete_graph(k))
            if self.search(underlying, clique, allow_switching=False).exists:
                return k
            k += 1

    def independence_number(self, graph: SignedGraph) -> int:
        complement = nx.complement(graph.to_networkx())
        _, size = nx.max_weight_clique(complement, weight=None)
        return size

    def fractional_chromatic_number_vt(self, graph: SignedGraph) -> Fraction:
        """n / alpha, which is exact for vertex-transitive graphs."""
        if not IsomorphismService().is_vertex_transitive(graph):
            raise PreconditionFailed("n / alpha is the fractional chromatic number only for vertex-transitive graphs")
        return Fraction(graph.n, self.independence_number(graph))
