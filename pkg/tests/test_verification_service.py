import pytest

from models import VerificationRun
from utils.errors import PreconditionFailed, UnknownSuite


def assert_passed(run: VerificationRun):
    failed = [f"{c.name}: {c.detail}" for c in run.checks if not c.passed]
    assert run.checks
    assert not failed, failed


def test_unknown_suite(verification):
    with pytest.raises(UnknownSuite):
        verification.run('everything')


def test_failing_check_is_recorded(verification):
    run = VerificationRun('demo')

    def broken():
        raise PreconditionFailed("no input")

    assert not verification._check(run, 'broken', broken)
    assert verification._check(run, 'with detail', lambda: (True, 'fine'))
    assert [c.passed for c in run.checks] == [False, True]
    assert run.checks[0].detail == 'PreconditionFailed: no input'
    assert run.checks[1].detail == 'fine'


def test_spc_equivalence(verification):
    assert_passed(verification.run('spc-equivalence', max_k=4, max_cayley_dim=4))


def test_clebsch_chain(verification):
    assert_passed(verification.run('clebsch-chain'))


def test_gg16(verification):
    assert_passed(verification.run('gg16', max_layer_k=5))


def test_ramsey333(verification):
    run = verification.run('ramsey333')
    assert_passed(run)
    assert len(run.checks) == 7


def test_edc_girth(verification):
    assert_passed(verification.run('edc-girth', instances=25, seed=3))


def test_packing_consistency(verification):
    assert_passed(verification.run('packing-consistency', max_atlas_n=4, instances=15))


def test_lift_pipeline(verification):
    assert_passed(verification.run('lift-pipeline'))


def test_circ_descent(verification):
    assert_passed(verification.run('circ-descent', trials=40, max_chi_k=1, spc4_bound=False))


@pytest.mark.slow
def test_k3c4(verification):
    assert_passed(verification.run('k3c4'))


@pytest.mark.slow
def test_spc_equivalence_full(verification):
    assert_passed(verification.run('spc-equivalence'))


@pytest.mark.slow
def test_circ_descent_full(verification):
    assert_passed(verification.run('circ-descent'))


@pytest.mark.parametrize('n', range(2, 9))
def test_cayley_components_every_family(verification, n):
    for k in range(1, n):
        families = verification._generator_families(n, k, seed=n)
        assert set(families) == {'units', 'adjacent pairs', 'random'}
        for family, generators in families.items():
            passed, detail = verification._cayley_components(n, k, generators)
            assert passed, (n, k, family, detail)
            assert detail == f"{1 << (n - k)} components"


def test_cayley_components_rejects_dependent_generators(verification):
    passed, detail = verification._cayley_components(4, 3, [1, 2, 3])
    assert not passed and 'not independent' in detail
