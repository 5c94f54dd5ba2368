"""Backtracking search for signed graph homomorphisms.

A source vertex v takes a state t = 2x + b: it maps to target vertex x, and
b = 1 means v is in the switching set. An edge uv of sign s is satisfied by
states (2x+b, 2y+c) iff the target has an edge xy of sign s when b == c and
of the opposite sign otherwise. This is the double-cover formulation: the
search never enumerates switchings separately.
"""
import logging
import random
from typing import List, Optional, Sequence, Tuple

from models import NEGATIVE, POSITIVE, SignedGraph, flip, iter_bits
from utils.errors import BudgetExceeded

logger = logging.getLogger(__name__)


def compatibility(target: SignedGraph) -> dict:
    """compat[sign][t] = bitmask of states t' allowed across an edge of that sign from state t."""
    m = target.n
    table = {POSITIVE: [0] * (2 * m), NEGATIVE: [0] * (2 * m)}
    for sign in (POSITIVE, NEGATIVE):
        for x in range(m):
            for b in (0, 1):
                mask = 0
                for c in (0, 1):
                    needed = sign if b == c else flip(sign)
                    for y in iter_bits(target.adjacency(needed)[x]):
                        mask |= 1 << (2 * y + c)
                table[sign][2 * x + b] = mask
    return table


class HomomorphismSolver:
    """One search instance; not shared between threads."""

    def __init__(self, source: SignedGraph, target: SignedGraph, budget: int,
                 allow_switching: bool = True, seed: Optional[int] = None):
        self.source = source
        self.target = target
        self.budget = budget
        self.allow_switching = allow_switching
        self.rng = random.Random(seed) if seed is not None else None
        self.nodes = 0
        self.compat = compatibility(target)
        self.neighbours = source.incidence
        self.degrees = [len(items) for items in self.neighbours]

    def initial_domains(self, components: Sequence[Sequence[int]]) -> List[int]:
        m = self.target.n
        all_states = (1 << (2 * m)) - 1
        unswitched = sum(1 << (2 * x) for x in range(m))
        looped = sum(3 << (2 * x) for x in range(m) if self.target.has_positive_loop(x))
        domains = [all_states if self.allow_switching else unswitched] * self.source.n
        for v in self.source.loops:
            domains[v] &= looped
        # switching a whole component is a symmetry; its least vertex stays unswitched
        for component in components:
            domains[component[0]] &= unswitched
        return domains

    def solve(self, domains: List[int]) -> Optional[List[int]]:
        """States per source vertex, or None when the domains admit no homomorphism."""
        if any(d == 0 for d in domains):
            return None
        assignment: List[Optional[int]] = [None] * self.source.n
        found = self._search(domains, assignment, self.source.n)
        logger.debug("hom search %d -> %d vertices: %s after %d nodes",
                     self.source.n, self.target.n, 'found' if found else 'none', self.nodes)
        return found

    def _choose(self, domains: List[int], assignment: List[Optional[int]]) -> int:
        best, best_key = -1, None
        for v, state in enumerate(assignment):
            if state is None:
                key = (domains[v].bit_count(), -self.degrees[v], v)
                if best_key is None or key < best_key:
                    best, best_key = v, key
        return best

    def _candidates(self, domain: int) -> List[int]:
        states = list(iter_bits(domain))
        if self.rng is not None:
            self.rng.shuffle(states)
        return states

    def _search(self, domains: List[int], assignment: List[Optional[int]],
                remaining: int) -> Optional[List[int]]:
        if remaining == 0:
            return list(assignment)
        v = self._choose(domains, assignment)
        for state in self._candidates(domains[v]):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(
                    f"Homomorphism search exceeded its budget of {self.budget} nodes", self.nodes)
            pruned = self._propagate(domains, assignment, v, state)
            if pruned is None:
                continue
            assignment[v] = state
            result = self._search(pruned, assignment, remaining - 1)
            if result is not None:
                return result
            assignment[v] = None
        return None

    def _propagate(self, domains: List[int], assignment: List[Optional[int]],
                   v: int, state: int) -> Optional[List[int]]:
        pruned = list(domains)
        pruned[v] = 1 << state
        for w, sign in self.neighbours[v]:
            allowed = self.compat[sign][state]
            if assignment[w] is not None:
                if not allowed >> assignment[w] & 1:
                    return None
                continue
            pruned[w] &= allowed
            if not pruned[w]:
                return None
        return pruned


def split_states(states: Sequence[int]) -> Tuple[Tuple[int, ...], frozenset]:
    """(vmap, switched vertices) from solver states."""
    vmap = tuple(t >> 1 for t in states)
    switched = frozenset(v for v, t in enumerate(states) if t & 1)
    return vmap, switched


def search_from_root(source: SignedGraph, target: SignedGraph, domains: List[int], root: int,
                     state: int, budget: int, allow_switching: bool,
                     seed: Optional[int]) -> Tuple[Optional[List[int]], int, bool]:
    """Worker entry point: fix root to state and search. Returns (states, nodes, exhausted)."""
    solver = HomomorphismSolver(source, target, budget, allow_switching, seed)
    fixed = list(domains)
    fixed[root] &= 1 << state
    try:
        return solver.solve(fixed), solver.nodes, False
    except BudgetExceeded:
        return None, solver.nodes, True
