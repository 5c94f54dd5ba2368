import logging
import random
import time
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import networkx as nx

from generators import get_generator
from models import (
    INF, NEGATIVE, POSITIVE, SPC_METHODS, CayleySpec, CheckResult, GirthProfile, Homomorphism, PosetVertex,
    SignedGraph, SpcMethod, Switching, VerificationRun, format_length, unit
)
from services.circular_service import CircularService
from services.construction_service import ConstructionService
from services.gallery_service import GalleryService
from services.homomorphism_service import HomomorphismService
from services.isomorphism_service import IsomorphismService
from services.lift_service import LiftService
from services.packing_service import PackingService
from services.signed_graph_service import SignedGraphService
from utils.config_manager import get_config
from utils.errors import InvariantViolation, SignedGraphError, UnknownSuite
from utils.file_manager import FileManager, write_sgraph

logger = logging.getLogger(__name__)

Outcome = Union[bool, Tuple[bool, str]]


class VerificationService:
    """Named batteries of identity checks; each check is recorded, none aborts its suite."""

    SUITES = ('spc-equivalence', 'clebsch-chain', 'gg16', 'ramsey333', 'edc-girth',
              'packing-consistency', 'k3c4', 'lift-pipeline', 'circ-descent')

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else get_config().get_all()
        self.graph_service = SignedGraphService()
        self.construction_service = ConstructionService(self.config)
        self.gallery_service = GalleryService()
        self.hom_service = HomomorphismService(self.config)
        self.iso_service = IsomorphismService(self.config.get('iso_max_vertices'))
        self.circular_service = CircularService(self.config)
        self.packing_service = PackingService(self.config)
        self.lift_service = LiftService(self.config)

    def run(self, suite: str, **options) -> VerificationRun:
        """
        Run one suite.

        Args:
            suite: One of SUITES
            **options: Suite-specific sizes (max_k, instances, trials, seed)

        Returns:
            VerificationRun with one CheckResult per identity checked
        """
        runners: Dict[str, Callable[..., None]] = {
            'spc-equivalence': self._spc_equivalence,
            'clebsch-chain': self._clebsch_chain,
            'gg16': self._gg16,
            'ramsey333': self._ramsey333,
            'edc-girth': self._edc_girth,
            'packing-consistency': self._packing_consistency,
            'k3c4': self._k3c4,
            'lift-pipeline': self._lift_pipeline,
            'circ-descent': self._circ_descent,
        }
        if suite not in runners:
            raise UnknownSuite(f"Unknown suite '{suite}'; choose from {', '.join(self.SUITES)}")
        run = VerificationRun(suite)
        started = time.perf_counter()
        runners[suite](run, **options)
        logger.info("suite %s: %d passed, %d failed in %.2fs",
                    suite, run.pass_count, run.fail_count, time.perf_counter() - started)
        return run

    def _check(self, run: VerificationRun, name: str, predicate: Callable[[], Outcome]) -> bool:
        started = time.perf_counter()
        try:
            outcome = predicate()
            passed, detail = outcome if isinstance(outcome, tuple) else (bool(outcome), "")
        except SignedGraphError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        run.add_check(CheckResult(name, passed, detail, time.perf_counter() - started))
        if not passed:
            logger.warning("check failed: %s %s", name, detail)
        return passed

    # Suites

    def _spc_equivalence(self, run: VerificationRun, max_k: int = 8, max_cayley_dim: int = 8,
                         seed: int = 0, **_):
        for k in range(1, max_k + 1):
            reference = write_sgraph(self.construction_service.spc(k))
            methods = [SpcMethod(kind) for kind in SPC_METHODS if kind not in ('cayley', 'product')]
            methods += [SpcMethod('product', (a, k - a)) for a in range(1, k)]
            for method in methods:
                if not get_generator(method, self.config).applicable(k):
                    continue
                self._check(run, f"SPC({k}) {method} = cayley",
                            lambda: write_sgraph(self.construction_service.spc(k, method)) == reference)
            self._check(run, f"girth profile of SPC({k}) = C_-{k + 1}",
                        lambda: self._profile_equals(self.construction_service.spc(k),
                                                     GirthProfile.of_negative_cycle(k + 1)))

        for n in range(2, max_cayley_dim + 1):
            for k in range(1, n):
                for family, generators in self._generator_families(n, k, seed).items():
                    self._check(run, f"Cayley components n={n} k={k} {family}",
                                lambda: self._cayley_components(n, k, generators))

    def _profile_equals(self, graph: SignedGraph, expected: GirthProfile) -> Outcome:
        profile = self.graph_service.girth_profile(graph)
        return profile == expected, f"{profile} vs {expected}"

    def _cayley_components(self, n: int, k: int, generators: List[int]) -> Outcome:
        """
        Cayley graph on Z_2^n with independent S+ = generators and S- = {their sum}.

        Each component is a coset c + span(S+). The linear map sending the i-th
        generator to e_i sends the sum to J, so it is a sign-preserving
        isomorphism of every coset onto SPC(k); both directions are verified.
        """
        span = {0: 0}
        for i, g in enumerate(generators):
            span.update({x ^ g: a | unit(i + 1) for x, a in span.items()})
        if len(span) != 1 << k:
            return False, f"generators {generators} are not independent"
        star = 0
        for g in generators:
            star ^= g
        graph = self.construction_service.signed_cayley(CayleySpec(n, frozenset(generators), frozenset([star])))
        spc = self.construction_service.spc(k)
        components = self.graph_service.connected_components(graph)
        expected = 1 << (n - k)
        if len(components) != expected:
            return False, f"{len(components)} components, expected {expected}"
        for component in components:
            root = component[0]
            if sorted(root ^ x for x in span) != component:
                return False, f"component of {root} is not its coset"
            position = {v: i for i, v in enumerate(component)}
            to_spc = Homomorphism(Switching(), tuple(span[v ^ root] for v in component))
            from_spc = Homomorphism(Switching(), tuple(position[root ^ x] for x in sorted(span, key=span.get)))
            subgraph = graph.induced_subgraph(component)
            for source, target, hom in ((subgraph, spc, to_spc), (spc, subgraph, from_spc)):
                valid, diagnostic = self.hom_service.verify_homomorphism(source, target, hom)
                if not valid:
                    return False, f"component of {root}: {diagnostic}"
        return True, f"{expected} components"

    def _generator_families(self, n: int, k: int, seed: int) -> Dict[str, List[int]]:
        rng = random.Random(seed * 1009 + n * 31 + k)
        while True:
            picked = rng.sample(range(1, 1 << n), k)
            reached = {0}
            for g in picked:
                reached |= {x ^ g for x in reached}
            if len(reached) == 1 << k:
                break
        return {
            'units': [unit(i) for i in range(1, k + 1)],
            'adjacent pairs': [unit(i) | unit(i + 1) for i in range(1, k + 1)],
            'random': picked,
        }

    def _clebsch_chain(self, run: VerificationRun, **_):
        gallery = self.gallery_service
        schlafli = gallery.schlafli27()
        self._check(run, "schlafli27 is 10-regular",
                    lambda: {schlafli.degree(v) for v in range(27)} == {10})
        chain = gallery.schlafli_deletion_chain()
        self._check(run, "deletion chain orders 27, 16, 10, 6", lambda: [g.n for g in chain] == [27, 16, 10, 6])
        self._check(run, "16-vertex graph is the Clebsch graph",
                    lambda: gallery.isomorphic(chain[1], gallery.clebsch()))
        self._check(run, "10-vertex graph is the Petersen graph",
                    lambda: gallery.isomorphic(chain[2], gallery.petersen()))
        self._check(run, "6-vertex graph is C6",
                    lambda: gallery.isomorphic(chain[3], gallery.positive_cycle(6)))
        self._check(run, "Clebsch graph is PC(4)",
                    lambda: gallery.isomorphic(gallery.clebsch(), self.construction_service.spc(4)))

    def _gg16(self, run: VerificationRun, max_layer_k: int = 6, **_):
        gallery, construction = self.gallery_service, self.construction_service
        pc4 = construction.spc(4)
        self._check(run, "gg16 is PC(4)", lambda: gallery.isomorphic(gallery.gg16(), pc4))
        self._check(run, "K4*C4 is PC(4)", lambda: gallery.isomorphic(
            SignedGraph.from_networkx(construction.cycle_star_product(nx.complete_graph(4))), pc4))
        self._check(run, "kneser(5,2) is the Petersen graph",
                    lambda: gallery.isomorphic(gallery.kneser(5, 2), gallery.petersen()))
        for i in (1, 2) + ((3,) if self.config.get('long_tests') else ()):
            self._check(run, f"middle layer of PC({2 * i}) is K({2 * i + 1},{i})",
                        lambda: gallery.isomorphic(
                            construction.spc(2 * i).induced_subgraph(construction.middle_layer(2 * i)),
                            gallery.kneser(2 * i + 1, i)))

        for k in range(2, 6):
            self._check(run, f"pc_distance agrees with BFS in PC({k})", lambda: self._pc_distance_matches(k))
        for k in range(2, max_layer_k + 1):
            self._check(run, f"layer unions recover B in PC({k})", lambda: self._layer_unions(k))
        self._check(run, "two-component split in PC(5)", lambda: self._two_component_split(5))

    def _pc_distance_matches(self, k: int) -> Outcome:
        graph = self.construction_service.spc(k, 'poset')
        reach = self.graph_service.signed_distances(graph, 0)
        for size in range(k + 2):
            for subset in combinations(range(k + 1), size):
                result = self.construction_service.pc_distance((), subset, k)
                label = PosetVertex.from_subset(subset, k).label
                observed = (reach[POSITIVE][label], reach[NEGATIVE][label])
                expected = (result.positive, result.negative)
                if observed != expected or result.distance != min(expected):
                    return False, f"B={set(subset)}: walks {observed} vs {expected}"
        return True

    def _layer_unions(self, k: int) -> Outcome:
        for size in range(2, k + 1):
            if 2 * size >= k + 1:
                break
            for subset in combinations(range(k + 1), size):
                for i in range(1, size):
                    union = self.construction_service.layer_union(k, subset, i)
                    if union != frozenset(subset):
                        return False, f"B={set(subset)} i={i} gives {set(union)}"
        return True

    def _two_component_split(self, k: int) -> Outcome:
        ground = frozenset(range(k + 1))
        for subset in combinations(range(k + 1), (k + 1) // 2):
            b = frozenset(subset)
            splits = self.construction_service.two_component_split(k, b)
            unions = {frozenset(layers.values()) for layers in splits}
            if len(splits) != 2 or unions != {frozenset([b]), frozenset([ground - b])}:
                return False, f"B={set(b)}: {len(splits)} components"
        return True

    def _ramsey333(self, run: VerificationRun, **_):
        gallery = self.gallery_service
        classes = gallery.ramsey333_classes()
        gg16 = gallery.gg16()
        for color, graph in enumerate(classes):
            self._check(run, f"colour class {color} is triangle-free", lambda: gallery.triangle_free(graph))
            self._check(run, f"colour class {color} is gg16", lambda: gallery.isomorphic(graph, gg16))

        def covers_k16() -> Outcome:
            seen = set()
            for graph in classes:
                pairs = {(u, v) for u, v in graph.pairs}
                if seen & pairs:
                    return False, "colour classes overlap"
                seen |= pairs
            return len(seen) == 120, f"{len(seen)} of 120 pairs coloured"

        self._check(run, "colour classes partition K16", covers_k16)

    def _edc_girth(self, run: VerificationRun, instances: int = 200, seed: int = 0, **_):
        construction = self.construction_service
        self._check(run, "edc(digon) is SPC(2) up to switching", lambda: self.iso_service.switching_isomorphic(
            construction.edc(construction.spc(1)), construction.spc(2)) is not None)
        self._check(run, "edc(C_-3) profile", lambda: self._profile_equals(
            construction.edc(construction.negative_cycle(3)), GirthProfile(g00=2, g10=4)))

        rng = random.Random(seed)
        graphs = [construction.random_signed_graph(rng.randint(2, 8), rng.randrange(10 ** 9), edge_probability=0.4)
                  for _ in range(instances)]

        def battery(problem_of: Callable[[SignedGraph], Optional[str]]) -> Outcome:
            failures = [f"trial {trial}: {problem}" for trial, problem in
                        enumerate(map(problem_of, graphs)) if problem]
            return not failures, '; '.join(failures[:3])

        self._check(run, f"EDC girth identities on {instances} seeded graphs",
                    lambda: battery(self._edc_identities))
        self._check(run, f"EDC of antibalanced graphs on {instances} seeded graphs",
                    lambda: battery(lambda g: self._edc_antibalanced(g.with_all_signs(NEGATIVE))))

    def _edc_identities(self, graph: SignedGraph) -> Optional[str]:
        before = self.graph_service.girth_profile(graph)
        after = self.graph_service.girth_profile(self.construction_service.edc(graph))
        expected = (before.g01, before.g11 + 1, before.g10 + 1)
        observed = (after.g01, after.g10, after.g11)
        if observed != expected:
            return f"(g01, g10, g11) = {tuple(map(format_length, observed))}, " \
                   f"expected {tuple(map(format_length, expected))}"
        return None

    def _edc_antibalanced(self, graph: SignedGraph) -> Optional[str]:
        before = self.graph_service.negative_girth(graph)
        cover = self.construction_service.edc(graph)
        if not self.graph_service.classify(cover).signed_bipartite:
            return "EDC of an antibalanced graph is not signed bipartite"
        after = self.graph_service.negative_girth(cover)
        if after != before + 1:
            return f"negative girth {format_length(after)}, expected {format_length(before + 1)}"
        return None

    def _packing_consistency(self, run: VerificationRun, max_atlas_n: int = 5, instances: int = 200,
                             seed: int = 0, **_):
        packing = self.packing_service

        def agree(graph: SignedGraph) -> Optional[str]:
            value, witness = packing.packing_number_oracle(graph)
            girth = self.graph_service.negative_girth(graph)
            if value > girth:
                return f"packing {value} exceeds negative girth {girth}"
            if value == INF:
                return None if girth == INF else "infinite packing of an unbalanced graph"
            if not witness.is_disjoint():
                return "oracle witness signatures overlap"
            through_hom = packing.packing_number(graph)
            if through_hom != value:
                return f"oracle {value} vs homomorphism route {through_hom}"
            if value >= 2:
                hom = packing.packing_to_homomorphism(graph, witness)
                target = self.construction_service.spc_loop(value - 1)
                valid, diagnostic = self.hom_service.verify_homomorphism(graph, target, hom)
                if not valid:
                    return f"packing_to_homomorphism: {diagnostic}"
            return None

        def battery(graphs) -> Outcome:
            count = 0
            for graph in graphs:
                count += 1
                problem = agree(graph)
                if problem:
                    return False, f"{graph.to_dict()}: {problem}"
            return True, f"{count} graphs"

        self._check(run, f"oracle = homomorphism route on all connected graphs n <= {max_atlas_n}",
                    lambda: battery(packing.atlas_instances(max_atlas_n)))
        rng = random.Random(seed)
        seeded = (self.construction_service.random_signed_graph(
            rng.randint(2, 8), rng.randrange(10 ** 9), edge_probability=0.35, connected=True)
            for _ in range(instances))
        self._check(run, f"oracle = homomorphism route on {instances} seeded graphs", lambda: battery(seeded))

        for k in range(1, 5):
            self._check(run, f"hom_to_signatures partitions C_-{k + 1} -> SPC({k})",
                        lambda: self._pulled_back_packing(self.construction_service.negative_cycle(k + 1), k))
        for k in range(1, 3):
            self._check(run, f"hom_to_signatures partitions SPC({k + 2}) -> SPC({k})",
                        lambda: self._pulled_back_packing(self.construction_service.spc(k + 2), k,
                                                          self.hom_service.spc_projection_hom(k)))
        for name, graph in FileManager(export_dir='.').load_fixtures('packing'):
            self._check(run, f"planar fixture {name} packs", lambda: packing.packs(graph))

    def _pulled_back_packing(self, graph: SignedGraph, k: int, hom=None) -> Outcome:
        if hom is None:
            hom = self.hom_service.find_homomorphism(graph, self.construction_service.spc(k))
            if hom is None:
                return False, f"no homomorphism to SPC({k})"
        result = self.packing_service.hom_to_signatures(graph, hom, k)
        return result.is_partition() and result.size == k + 1, f"{result.size} signatures"

    def _k3c4(self, run: VerificationRun, **_):
        construction, hom = self.construction_service, self.hom_service
        underlying = construction.cycle_star_product(nx.complete_graph(3))
        graph = SignedGraph.from_networkx(underlying, NEGATIVE)
        self._check(run, "K3*C4 has 12 vertices and is 4-regular",
                    lambda: graph.n == 12 and {graph.degree(v) for v in range(12)} == {4})
        self._check(run, "K3*C4 is triangle-free", lambda: self.gallery_service.triangle_free(graph))
        self._check(run, "independence number 4", lambda: hom.independence_number(graph) == 4)
        self._check(run, "chromatic number 3", lambda: hom.chromatic_number(graph) == 3)
        self._check(run, "vertex-transitive", lambda: self.iso_service.is_vertex_transitive(graph))
        self._check(run, "fractional chromatic number 3",
                    lambda: hom.fractional_chromatic_number_vt(graph) == 3)
        self._check(run, "circular chromatic number 3",
                    lambda: self.circular_service.circular_chromatic_number(graph).value == 3)

        def edc_bound() -> Outcome:
            cover = construction.edc(graph)
            classes = self.graph_service.classify(cover)
            girth = self.graph_service.negative_girth(cover)
            return (cover.n == 24 and classes.signed_bipartite and girth == 6,
                    f"{cover.n} vertices, negative girth {format_length(girth)}")

        self._check(run, "EDC of (K3*C4, -) is signed bipartite of negative girth 6", edc_bound)
        ladder = construction.cycle_star_product(nx.complete_graph(2))
        self._check(run, "K2*C4 is a cubic graph on 8 vertices",
                    lambda: ladder.number_of_nodes() == 8 and {d for _, d in ladder.degree()} == {3})

    def _lift_pipeline(self, run: VerificationRun, max_n: int = 8, instances: int = 12, seed: int = 0, **_):
        construction, lift = self.construction_service, self.lift_service
        target = construction.edc(construction.spc(2))
        self._check(run, "edc(SPC(2)) is SPC(3) up to switching",
                    lambda: self.iso_service.switching_isomorphic(target, construction.spc(3)) is not None)

        def single_edge_classes() -> Outcome:
            cycle = construction.negative_cycle(4)
            packing = self.packing_service.packing_from_negative_sets(cycle, [{i} for i in range(4)])
            instance = lift.build_instance(cycle, packing, 3, construction.spc(2))
            result = lift.lift_to_edc(instance)
            return self.hom_service.verify_homomorphism(cycle, target, result)

        self._check(run, "C_-4 with singleton classes lifts", single_edge_classes)
        for position, graph in enumerate(lift.suite_instances(max_n, instances, seed)):
            def lifted(graph=graph) -> Outcome:
                instance, result = lift.lift_pipeline(graph)
                valid, diagnostic = self.hom_service.verify_homomorphism(graph, target, result)
                return valid, diagnostic or f"n={graph.n}, contraction n={instance.contraction.n}"

            self._check(run, f"instance {position} lifts to EDC(SPC(2))", lifted)

    def _circ_descent(self, run: VerificationRun, trials: int = 500, seed: int = 0, max_chi_k: int = 3,
                      spc4_bound: bool = True, **_):
        circular, construction = self.circular_service, self.construction_service
        for k in range(1, max_chi_k + 1):
            self._check(run, f"chi_c(SPC({k})) = 4",
                        lambda: circular.circular_chromatic_number(construction.spc(k)).value == 4)
        if spc4_bound:
            spc4 = construction.spc(4)
            self._check(run, "SPC(4) has a circular 4/1-colouring",
                        lambda: circular.has_circular_coloring(spc4, 4, 1) is not None)
            # 15/4 is the largest p/q < 4 with p <= 16; monotonicity covers the rest
            self._check(run, "SPC(4) has no circular p/q-colouring below 4 with p <= 16",
                        lambda: circular.has_circular_coloring(spc4, 15, 4) is None)

        self._check(run, f"descent below r = 4 on {trials} seeded trials", lambda: self._descent_trials(trials, seed))

    def _descent_trials(self, trials: int, seed: int) -> Outcome:
        circular, construction = self.circular_service, self.construction_service
        rng = random.Random(seed)
        circumferences = [Fraction(5, 2), Fraction(3), Fraction(7, 2), Fraction(11, 3), Fraction(15, 4)]
        failures, descended = [], 0
        for trial in range(trials):
            dim = rng.randint(2, 4)
            vectors = list(range(1, 1 << dim))
            splus = frozenset(rng.sample(vectors, rng.randint(1, min(4, len(vectors)))))
            sminus = frozenset(rng.sample(vectors, rng.randint(0, 2)))
            spec = CayleySpec(dim, splus, sminus)
            # s1 in S- as well would leave a negative loop on the contraction
            contractible = sorted(splus - sminus)
            if not contractible:
                continue
            r = rng.choice(circumferences)
            coloring = circular.has_circular_coloring(construction.signed_cayley(spec), r.numerator,
                                                      r.denominator, seed=rng.randrange(10 ** 9))
            if coloring is None:
                continue
            try:
                circular.descend_coloring(spec, rng.choice(contractible), coloring)
            except InvariantViolation as e:
                failures.append(f"trial {trial} {spec.to_dict()}: {e}")
            descended += 1
        return not failures, '; '.join(failures[:3]) or f"{descended} colourings descended"
