import logging
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from models import (
    ContractedGraph, Homomorphism, LiftInstance, SignaturePacking, SignedGraph, Switching
)
from services.construction_service import ConstructionService
from services.homomorphism_service import HomomorphismService
from services.packing_service import PackingService
from services.signed_graph_service import SignedGraphService, find_switching
from utils.config_manager import get_config
from utils.errors import InvariantViolation, NotACut, NotAPartition, PreconditionFailed
from utils.file_manager import FileManager

logger = logging.getLogger(__name__)


class LiftService:
    """Lifts a bound B of SP_l to EDC(B) for SP_{l+1}, one proof step at a time."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else get_config().get_all()
        self.graph_service = SignedGraphService()
        self.construction_service = ConstructionService(self.config)
        self.hom_service = HomomorphismService(self.config)
        self.packing_service = PackingService(self.config)

    def _require_partition(self, packing: SignaturePacking, index: int):
        if not packing.is_partition():
            raise NotAPartition("Packing signatures must make every edge negative exactly once")
        if not 0 <= index < packing.size:
            raise PreconditionFailed(f"Packing class {index} out of range 0..{packing.size - 1}")

    def contract_packing_class(self, graph: SignedGraph, packing: SignaturePacking,
                               index: int) -> Tuple[ContractedGraph, Dict[int, FrozenSet[int]]]:
        """
        Contract the negative edges of class index; parallel edges remain.

        Returns:
            (contracted multigraph, negative set of every other class on it)

        Raises:
            NotAPartition: The packing does not cover each edge exactly once
            InvariantViolation: The remaining signatures are not equivalent on
                the contraction, or it leaves SP_l although graph is in SP_{l+1}
        """
        self._require_partition(packing, index)
        contracted = packing.negative_sets[index]

        merged = nx.utils.UnionFind(range(graph.n))
        for i in contracted:
            u, v, _ = graph.edges[i]
            merged.union(u, v)
        roots = sorted({merged[v] for v in range(graph.n)}, key=lambda r: min(
            v for v in range(graph.n) if merged[v] == r))
        position = {root: i for i, root in enumerate(roots)}
        projection = tuple(position[merged[v]] for v in range(graph.n))

        edges = tuple(
            (*sorted((projection[u], projection[v])), i)
            for i, (u, v, _) in enumerate(graph.edges) if i not in contracted)
        contraction = ContractedGraph(len(roots), edges, projection)

        signatures = {j: contraction.local_negative_set(negative)
                      for j, negative in enumerate(packing.negative_sets) if j != index}
        self._check_contraction(graph, packing, contraction, signatures)
        logger.debug("contracted class %d: %d -> %d vertices, %d edges kept",
                     index, graph.n, contraction.n, len(edges))
        return contraction, signatures

    def _check_contraction(self, graph: SignedGraph, packing: SignaturePacking,
                           contraction: ContractedGraph, signatures: Dict[int, FrozenSet[int]]):
        classes = sorted(signatures)
        if not classes:
            return
        reference = signatures[classes[0]]
        for j in classes[1:]:
            if find_switching(contraction.n, contraction.pairs, reference, signatures[j]) is None:
                raise InvariantViolation(
                    f"Classes {classes[0]} and {j} are not switching equivalent on the contraction")

        l = packing.size - 1
        if l >= 2 and self.graph_service.in_sp_k(graph, l + 1):
            reduced = contraction.reduce(
                {contraction.edges[i][2] for i in reference})
            if not self.graph_service.in_sp_k(reduced, l):
                raise InvariantViolation(f"Contraction of an SP_{l + 1} graph is not in SP_{l}")

    def separating_cut(self, graph: SignedGraph, negative_a: Iterable[int],
                       negative_b: Iterable[int]) -> Switching:
        """Side A (containing vertex 0) of the cut whose edges are E-(a) together with E-(b)."""
        negative_a, negative_b = frozenset(negative_a), frozenset(negative_b)
        shared = negative_a & negative_b
        if shared:
            raise NotACut(f"Signatures share negative edges {sorted(shared)}")
        other_side = find_switching(graph.n, graph.pairs, negative_a | negative_b, ())
        if other_side is None:
            raise NotACut("The union of the two negative sets is not an edge cut")
        return other_side.complement(graph.n)

    def build_instance(self, graph: SignedGraph, packing: SignaturePacking, index: int,
                       bhat: SignedGraph, **search_options) -> LiftInstance:
        """Contract class index and map the contraction, signed by the first other class, to bhat."""
        contraction, signatures = self.contract_packing_class(graph, packing, index)
        reference_index = min(signatures)
        reduced = contraction.reduce(packing.negative_sets[reference_index])
        hom = self.hom_service.find_homomorphism(reduced, bhat, **search_options)
        if hom is None:
            raise PreconditionFailed("The contracted graph does not map to the given bound")
        return LiftInstance(graph, packing, index, bhat, contraction, reference_index, hom)

    def lift_to_edc(self, instance: LiftInstance) -> Homomorphism:
        """
        Homomorphism of (G, sigma_index) to EDC(bhat).

        Pull the switched reference signature sigma' back to G; its negative
        edges avoid the contracted class, so together with that class they form
        a cut (A, complement). A vertex v goes to x_0 when v is in A and to x_1
        otherwise, where x is the image of its projection.
        """
        graph, packing, index = instance.graph, instance.packing, instance.index
        self._require_partition(packing, index)
        l = packing.size - 1
        if l + 1 < 2 or not self.graph_service.in_sp_k(graph, l + 1):
            raise PreconditionFailed(f"Lifting needs the graph in SP_{l + 1}; SP membership fails")

        contraction = instance.contraction
        reference = packing.negative_sets[instance.reference_index]
        reduced = contraction.reduce(reference)
        valid, diagnostic = self.hom_service.verify_homomorphism(reduced, instance.bhat, instance.hom_to_bhat)
        if not valid:
            raise PreconditionFailed(f"Map of the contraction to the bound is invalid: {diagnostic}")

        lifted_switch = instance.hom_to_bhat.switching
        sigma_prime = frozenset(
            i for i, (u, v, _) in enumerate(graph.edges)
            if (i in reference) != ((contraction.projection[u] in lifted_switch)
                                    != (contraction.projection[v] in lifted_switch)))
        contracted = packing.negative_sets[index]
        if sigma_prime & contracted:
            raise InvariantViolation("The pulled-back signature shares a negative edge with the contracted class")

        side_a = self.separating_cut(graph, sigma_prime, contracted)
        offset = instance.bhat.n
        vmap = tuple(
            instance.hom_to_bhat.vmap[contraction.projection[v]] + (0 if v in side_a else offset)
            for v in range(graph.n))
        lifted = Homomorphism(packing.cuts[index], vmap)

        target = self.construction_service.edc(instance.bhat)
        valid, diagnostic = self.hom_service.verify_homomorphism(graph, target, lifted)
        if not valid:
            raise InvariantViolation(f"Lifted map fails on EDC of the bound: {diagnostic}")
        return lifted

    def lift_pipeline(self, graph: SignedGraph, k: int = 3,
                      **search_options) -> Tuple[LiftInstance, Homomorphism]:
        """Map graph to SPC(k), pack by labels, contract the J class, map to SPC(k-1) and lift."""
        to_spc = self.hom_service.find_homomorphism(graph, self.construction_service.spc(k), **search_options)
        if to_spc is None:
            raise PreconditionFailed(f"Graph does not map to SPC({k})")
        packing = self.packing_service.hom_to_signatures(graph, to_spc, k)
        instance = self.build_instance(graph, packing, k, self.construction_service.spc(k - 1), **search_options)
        return instance, self.lift_to_edc(instance)

    def suite_instances(self, max_n: int = 8, count: int = 12, seed: int = 0) -> List[SignedGraph]:
        """Curated planar bipartite graphs of negative girth 4: shipped fixtures, else generated."""
        fixtures = [g for _, g in FileManager(export_dir='.').load_fixtures('lift')]
        if fixtures:
            return [g for g in fixtures if g.n <= max_n]
        return self.construction_service.planar_quadrangulation_suite(max_n, count, seed)
