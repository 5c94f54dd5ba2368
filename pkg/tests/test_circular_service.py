import random
from fractions import Fraction

import pytest

from models import NEGATIVE, CayleySpec, CircularColoring, SignedGraph
from services.circular_service import CircularService
from utils.errors import InfeasibleClique, InvalidGenerator, InvalidInputColoring, InvariantViolation

from tests.helpers import brute_force_circular, random_signed_graph, switched


class TestCircularClique:
    def test_needs_circumference_two(self, circular):
        with pytest.raises(InfeasibleClique):
            circular.circular_clique(3, 2)

    def test_every_point_has_a_loop(self, circular):
        clique = circular.circular_clique(7, 2)
        assert clique.loops == list(range(7))

    def test_k41_is_equivalent_to_spc_loop_1(self, circular, hom_service, construction):
        clique, looped = circular.circular_clique(4, 1), construction.spc_loop(1)
        assert hom_service.search(clique, looped).exists
        assert hom_service.search(looped, clique).exists


class TestColorings:
    def test_negative_four_cycle_at_eight_thirds(self, circular, c4_negative):
        coloring = circular.has_circular_coloring(c4_negative, 8, 3)
        assert coloring is not None
        assert coloring.circumference == Fraction(8, 3)
        assert circular.verify_circular_coloring(c4_negative, coloring) == (True, None)

    def test_negative_four_cycle_below_eight_thirds(self, circular, c4_negative):
        assert circular.has_circular_coloring(c4_negative, 5, 2) is None

    def test_grid_oracle_agrees(self, c4_negative):
        assert brute_force_circular(c4_negative, 16, 6)
        assert not brute_force_circular(c4_negative, 10, 4)

    def test_grid_feasible(self, circular, c4_negative):
        assert circular.grid_feasible(c4_negative, 8, 3, 2)
        assert not circular.grid_feasible(c4_negative, 5, 2, 2)

    def test_seeded_coloring_is_valid(self, circular, construction):
        graph = construction.spc(3)
        coloring = circular.has_circular_coloring(graph, 4, 1, seed=5)
        assert circular.verify_circular_coloring(graph, coloring)[0]

    def test_wrong_point_count(self, circular, c4_negative):
        valid, diagnostic = circular.verify_circular_coloring(c4_negative, CircularColoring(8, 3, (0, 1)))
        assert not valid and '2 points' in diagnostic

    def test_negative_edge_too_short(self, circular, c4_negative):
        valid, diagnostic = circular.verify_circular_coloring(c4_negative, CircularColoring(8, 3, (0, 0, 0, 0)))
        assert not valid and 'negative edge' in diagnostic


class TestChromaticNumber:
    def test_candidates(self, circular):
        assert circular.candidates(2) == [Fraction(2), Fraction(5, 2), Fraction(3), Fraction(7, 2),
                                          Fraction(4), Fraction(5), Fraction(6), Fraction(7), Fraction(8)]

    def test_negative_four_cycle(self, circular, c4_negative):
        result = circular.circular_chromatic_number(c4_negative)
        assert result.value == Fraction(8, 3)
        assert result.to_dict()['chi_c'] == '8/3'

    def test_digon(self, circular, digon):
        assert circular.circular_chromatic_number(digon).value == 4

    @pytest.mark.slow
    @pytest.mark.parametrize('k', [2, 3])
    def test_spc(self, circular, construction, k):
        assert circular.circular_chromatic_number(construction.spc(k)).value == 4


class TestDescent:
    def test_below_four_is_valid(self, circular, construction):
        # S- = {e_3} joins two positive squares; it is balanced and colours at 7/2
        spec = CayleySpec(3, frozenset({1, 2}), frozenset({4}))
        coloring = circular.has_circular_coloring(construction.signed_cayley(spec), 7, 2)
        result = circular.descend_coloring(spec, 1, coloring)
        assert result.guaranteed
        assert result.valid, result.diagnostic

    def test_positive_cube(self, circular, construction):
        spec = CayleySpec(3, frozenset({1, 2, 4}))
        coloring = circular.has_circular_coloring(construction.signed_cayley(spec), 5, 2)
        result = circular.descend_coloring(spec, 2, coloring)
        assert result.valid and result.guaranteed
        assert len(result.coloring.points) == 4

    def test_at_four_nothing_is_promised(self, circular, construction):
        spec = CayleySpec.spc(3)
        coloring = circular.has_circular_coloring(construction.signed_cayley(spec), 4, 1)
        assert not circular.descend_coloring(spec, 1, coloring).guaranteed

    def test_generator_must_be_positive(self, circular, construction):
        spec = CayleySpec(3, frozenset({1, 2}), frozenset({4}))
        coloring = circular.has_circular_coloring(construction.signed_cayley(spec), 7, 2)
        with pytest.raises(InvalidGenerator):
            circular.descend_coloring(spec, 4, coloring)

    def test_input_coloring_is_checked(self, circular):
        spec = CayleySpec(3, frozenset({1, 2}), frozenset({4}))
        with pytest.raises(InvalidInputColoring):
            circular.descend_coloring(spec, 1, CircularColoring(7, 2, (0,) * 8))


class TestSymmetryBreaking:
    def test_least_vertex_of_each_component_sits_at_zero(self, circular, c4_negative):
        shifted = tuple((u + 4, v + 4, s) for u, v, s in c4_negative.edges)
        graph = SignedGraph(8, c4_negative.edges + shifted)
        coloring = circular.has_circular_coloring(graph, 8, 3, seed=11)
        assert coloring.points[0] == 0 and coloring.points[4] == 0
        assert circular.verify_circular_coloring(graph, coloring) == (True, None)

    def test_search_is_sign_preserving_and_pinned(self, circular, c4_negative, monkeypatch):
        calls = []
        search = circular.hom_service.search

        def recording(source, target, **options):
            calls.append(options)
            return search(source, target, **options)

        monkeypatch.setattr(circular.hom_service, 'search', recording)
        circular.has_circular_coloring(c4_negative, 8, 3)
        assert calls[0]['allow_switching'] is False
        assert calls[0]['pinned'] == {0: 0}

    def test_worker_processes_agree(self, circular, c4_negative):
        coloring = circular.has_circular_coloring(c4_negative, 8, 3, threads=2)
        assert coloring.points[0] == 0
        assert circular.verify_circular_coloring(c4_negative, coloring) == (True, None)
        assert circular.has_circular_coloring(c4_negative, 5, 2, threads=2) is None

    def test_negative_edge_only_components(self, circular):
        graph = SignedGraph(4, ((0, 1, NEGATIVE), (2, 3, NEGATIVE)))
        coloring = circular.has_circular_coloring(graph, 2, 1)
        assert coloring.points[0] == 0 and coloring.points[2] == 0


class TestBisection:
    @pytest.mark.parametrize('seed', range(12))
    def test_matches_exhaustive_scan(self, circular, seed):
        graph = random_signed_graph(random.Random(seed), 3)
        expected = next(value for value in circular.candidates(graph.n)
                        if brute_force_circular(graph, 2 * value.numerator, 2 * value.denominator))
        assert circular.circular_chromatic_number(graph).value == expected

    def test_numerator_cap(self, circular):
        assert all(value.numerator <= 8 for value in circular.candidates(4, max_numerator=8))
        assert max(circular.candidates(4, max_numerator=8)) == 8

    def test_capped_search_still_finds_eight_thirds(self, circular, c4_negative):
        assert circular.circular_chromatic_number(c4_negative, max_numerator=8).value == Fraction(8, 3)

    def test_monotonicity_guard(self, circular, c4_negative, monkeypatch):
        feasible = circular.has_circular_coloring
        seen = []

        def flaky_at_three(graph, p, q, *args, **kwargs):
            seen.append(Fraction(p, q))
            if Fraction(p, q) == 3 and seen.count(Fraction(3)) > 1:
                return None
            return feasible(graph, p, q, *args, **kwargs)

        monkeypatch.setattr(circular, 'candidates', lambda n, cap=None: [Fraction(8, 3), Fraction(3)])
        monkeypatch.setattr(circular, 'has_circular_coloring', flaky_at_three)
        with pytest.raises(InvariantViolation, match='not at 3'):
            circular.circular_chromatic_number(c4_negative)


@pytest.mark.slow
class TestSpc4:
    def test_four_is_feasible(self, construction):
        service = CircularService({'hom_budget': 10 ** 9, 'threads': 1})
        assert service.has_circular_coloring(construction.spc(4), 4, 1) is not None

    def test_nothing_below_four_with_numerator_at_most_sixteen(self, construction):
        service = CircularService({'hom_budget': 10 ** 9, 'threads': 1})
        assert max(v for v in service.candidates(16, max_numerator=16) if v < 4) == Fraction(15, 4)
        assert service.has_circular_coloring(construction.spc(4), 15, 4) is None


def test_invalid_descent_below_four_raises(circular, construction, monkeypatch):
    spec = CayleySpec(3, frozenset({1, 2}), frozenset({4}))
    coloring = circular.has_circular_coloring(construction.signed_cayley(spec), 7, 2)
    monkeypatch.setattr(circular, '_representative', lambda phi, x, y, p: 0)
    with pytest.raises(InvariantViolation, match='below r = 4'):
        circular.descend_coloring(spec, 1, coloring)


def test_invalid_descent_at_four_is_reported(circular, construction, monkeypatch):
    spec = CayleySpec(3, frozenset({1, 2}), frozenset({4}))
    coloring = circular.has_circular_coloring(construction.signed_cayley(spec), 4, 1)
    monkeypatch.setattr(circular, '_representative', lambda phi, x, y, p: 0)
    result = circular.descend_coloring(spec, 1, coloring)
    assert not result.guaranteed and not result.valid


SWEEP_CIRCUMFERENCES = [Fraction(5, 2), Fraction(3), Fraction(7, 2), Fraction(4)]


class TestSeededSweeps:
    @pytest.mark.parametrize('seed', range(10))
    def test_switching_invariance(self, circular, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 5)
        graph = random_signed_graph(rng, n, density=0.4)
        other = switched(graph, [v for v in range(n) if rng.random() < 0.5])
        for r in SWEEP_CIRCUMFERENCES:
            first = circular.has_circular_coloring(graph, r.numerator, r.denominator)
            second = circular.has_circular_coloring(other, r.numerator, r.denominator)
            assert (first is None) == (second is None), (seed, r)
            if second is not None:
                assert circular.verify_circular_coloring(other, second)[0]

    @pytest.mark.parametrize('seed', range(10))
    def test_refined_grid_matches_exhaustive_oracle(self, circular, seed):
        rng = random.Random(100 + seed)
        graph = random_signed_graph(rng, rng.randint(1, 4), density=0.4)
        for r in SWEEP_CIRCUMFERENCES:
            p, q = 2 * r.numerator, 2 * r.denominator
            expected = brute_force_circular(graph, p, q)
            assert circular.grid_feasible(graph, p, q, 2) == expected, (seed, r)
            assert (circular.has_circular_coloring(graph, r.numerator, r.denominator) is not None) == expected

    @pytest.mark.parametrize('seed', range(8))
    def test_chromatic_number_is_monotone_under_homomorphisms(self, circular, hom_service, seed):
        rng = random.Random(200 + seed)
        n = rng.randint(2, 4)
        target = random_signed_graph(rng, n, density=0.5)
        kept = tuple(e for e in target.edges if rng.random() < 0.7)
        source = switched(SignedGraph(n, kept), [v for v in range(n) if rng.random() < 0.5])
        assert hom_service.search(source, target).exists
        assert circular.circular_chromatic_number(source).value <= circular.circular_chromatic_number(target).value
