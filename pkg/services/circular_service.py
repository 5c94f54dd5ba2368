import logging
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from models import (
    NEGATIVE, POSITIVE, CayleySpec, CircularChromaticResult, CircularColoring, DescentResult,
    SignedGraph, circular_distance
)
from services.construction_service import ConstructionService
from services.homomorphism_service import HomomorphismService
from utils.config_manager import get_config
from utils.errors import (
    InfeasibleClique, InvalidGenerator, InvalidInputColoring, InvariantViolation, UnboundedCandidate
)

logger = logging.getLogger(__name__)


class CircularService:
    """Circular colourings: negative edges at distance >= 1, positive edges at distance <= r/2 - 1.

    Everything runs on the discrete circle Z_p with point i at position i/q.
    Switching a vertex moves it to the antipode, which is a grid point only
    for even p, so feasibility at p/q is decided on the doubled grid (2p, 2q).
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else get_config().get_all()
        self.hom_service = HomomorphismService(self.config)
        self.construction_service = ConstructionService(self.config)

    def circular_clique(self, p: int, q: int) -> SignedGraph:
        """Vertices Z_p; negative edge at distance >= q, positive edge at 2 * distance <= p - 2q."""
        if q < 1 or p < 2 * q:
            raise InfeasibleClique(f"Circular clique needs p >= 2q >= 2, got ({p}, {q})")
        edges = [(i, i, POSITIVE) for i in range(p)]
        for i in range(p):
            for j in range(i + 1, p):
                d = circular_distance(i, j, p)
                if d >= q:
                    edges.append((i, j, NEGATIVE))
                if 2 * d <= p - 2 * q:
                    edges.append((i, j, POSITIVE))
        return SignedGraph(p, tuple(edges))

    def verify_circular_coloring(self, graph: SignedGraph, coloring: CircularColoring) -> Tuple[bool, Optional[str]]:
        p, q = coloring.p, coloring.q
        if len(coloring.points) != graph.n:
            return False, f"coloring has {len(coloring.points)} points, graph has {graph.n} vertices"
        if p < 2 * q:
            return False, f"circumference {p}/{q} is below 2"
        for u, v, sign in graph.edges:
            d = circular_distance(coloring.points[u], coloring.points[v], p)
            if sign == NEGATIVE and d < q:
                return False, f"negative edge ({u}, {v}) spans {d}/{q} < 1"
            if sign == POSITIVE and 2 * d > p - 2 * q:
                return False, f"positive edge ({u}, {v}) spans {d}/{q} > r/2 - 1"
        return True, None

    def has_circular_coloring(self, graph: SignedGraph, p: int, q: int,
                              budget: Optional[int] = None,
                              seed: Optional[int] = None,
                              threads: Optional[int] = None) -> Optional[CircularColoring]:
        """
        Circular p/q-colouring of graph, or None. A seed picks a pseudo-random witness.

        On the doubled grid switching a vertex is the antipodal move and
        rotation is an automorphism, so the search is sign-preserving and
        pins the least vertex of every component to point 0.
        """
        if q < 1 or p < 2 * q:
            raise InfeasibleClique(f"Circumference {p}/{q} is below 2")
        clique = self.circular_clique(2 * p, 2 * q)
        components = self.hom_service.graph_service.connected_components(graph)
        pinned = {min(component): 0 for component in components if component}
        result = self.hom_service.search(graph, clique, budget=budget, threads=threads, seed=seed,
                                         allow_switching=False, pinned=pinned)
        hom = result.homomorphism
        if hom is None:
            logger.debug("%s/%s infeasible after %d nodes", p, q, result.nodes)
            return None
        points = tuple((x + p * (v in hom.switching)) % (2 * p) for v, x in enumerate(hom.vmap))
        coloring = CircularColoring(2 * p, 2 * q, points).reduced()
        valid, diagnostic = self.verify_circular_coloring(graph, coloring)
        if not valid:
            raise InvariantViolation(f"Circular coloring from the clique map is invalid: {diagnostic}")
        return coloring

    def grid_feasible(self, graph: SignedGraph, p: int, q: int, refinement: int) -> bool:
        """Feasibility on the finer grid (p * refinement, q * refinement), no switching allowed."""
        clique = self.circular_clique(p * refinement, q * refinement)
        return self.hom_service.search(graph, clique, allow_switching=False).exists

    def candidates(self, n: int, max_numerator: Optional[int] = None) -> List[Fraction]:
        """Reduced p/q with q <= n and 2q <= p <= factor * n, ascending."""
        factor = self.config.get('chi_candidate_factor', 4)
        upper = max(factor * max(n, 1), 2)
        if max_numerator is not None:
            upper = min(upper, max_numerator)
        values = {Fraction(p, q) for q in range(1, max(n, 1) + 1)
                  for p in range(2 * q, upper + 1) if gcd(p, q) == 1}
        return sorted(values)

    def circular_chromatic_number(self, graph: SignedGraph,
                                  budget: Optional[int] = None,
                                  threads: Optional[int] = None,
                                  seed: Optional[int] = None,
                                  max_numerator: Optional[int] = None) -> CircularChromaticResult:
        """
        Least feasible candidate circumference, with its colouring.

        Feasibility is monotone in r, so the candidates are bisected. The
        candidate just above the answer is re-checked as a runtime guard.
        """
        candidates = self.candidates(graph.n, max_numerator)
        if not candidates:
            raise UnboundedCandidate(f"No candidate circumference with numerator <= {max_numerator}")

        def feasible(value: Fraction) -> Optional[CircularColoring]:
            return self.has_circular_coloring(graph, value.numerator, value.denominator, budget,
                                              seed=seed, threads=threads)

        best = feasible(candidates[-1])
        if best is None:
            raise UnboundedCandidate(f"No candidate circumference up to {candidates[-1]} is feasible")
        low, high = 0, len(candidates) - 1
        while low < high:
            middle = (low + high) // 2
            coloring = feasible(candidates[middle])
            if coloring is None:
                logger.debug("chi_c bisection: %s infeasible", candidates[middle])
                low = middle + 1
            else:
                best, high = coloring, middle
        value = candidates[high]
        if high + 1 < len(candidates) and feasible(candidates[high + 1]) is None:
            raise InvariantViolation(f"Feasible at {value} but not at {candidates[high + 1]}")
        return CircularChromaticResult(value, best)

    def _representative(self, phi: Tuple[int, ...], x: int, y: int, p: int) -> int:
        """Member of the pair {x, y} whose clockwise arc to the other is the short side."""
        arc = (phi[y] - phi[x]) % p
        if arc < p - arc:
            return x
        if arc > p - arc:
            return y
        return x if phi[x] <= phi[y] else y

    def descend_coloring(self, spec: CayleySpec, s1: int, coloring: CircularColoring) -> DescentResult:
        """
        Colour the contraction of x ~ x + s1 from a colouring of the Cayley graph.

        Each pair keeps the point of the member x whose clockwise arc to x + s1
        is the short side; ties go to the smaller point. For r < 4 the result
        is a valid colouring of the contraction.

        Raises:
            InvariantViolation: When r < 4 and the descended colouring is invalid
        """
        if s1 == 0 or s1 not in spec.splus:
            raise InvalidGenerator(f"{s1} is not a nonzero positive generator of the Cayley graph")
        graph = self.construction_service.signed_cayley(spec)
        valid, diagnostic = self.verify_circular_coloring(graph, coloring)
        if not valid:
            raise InvalidInputColoring(diagnostic)

        p, q, phi = coloring.p, coloring.q, coloring.points
        compress = self.construction_service.quotient_map(s1)
        points = [0] * (graph.n // 2)
        for x in range(graph.n):
            y = x ^ s1
            if x < y:
                points[compress(x)] = phi[self._representative(phi, x, y, p)]

        descended = CircularColoring(p, q, tuple(points))
        contracted = self.construction_service.contract_label(spec, s1)
        valid, diagnostic = self.verify_circular_coloring(contracted, descended)
        guaranteed = p < 4 * q
        if guaranteed and not valid:
            raise InvariantViolation(f"Descent below r = 4 produced an invalid colouring: {diagnostic}")
        return DescentResult(descended, valid, guaranteed, diagnostic)
