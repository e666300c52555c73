import pytest

from freeap.laws import (
    CHECKERS,
    MUTANTS,
    GenConfig,
    LawReport,
    check_adjunction,
    check_applicative_laws,
    check_functor_laws,
    check_iso,
    check_naturality,
    run_all,
)

SMALL = GenConfig(cases=40, seed=3)


@pytest.mark.parametrize("check", CHECKERS, ids=lambda c: c.__name__)
def test_reference_operations_pass(check):
    report = check(SMALL)
    assert report.passed, report.render()
    assert report.cases == SMALL.cases


@pytest.mark.parametrize("check", CHECKERS, ids=lambda c: c.__name__)
def test_pure_only_structures_pass(check):
    assert check(GenConfig(max_size=0, cases=20)).passed


def test_reports_are_reproducible():
    config = GenConfig(cases=60, seed=99)
    first = [r.render() for r in run_all(config, MUTANTS["ap_swap"])]
    second = [r.render() for r in run_all(config, MUTANTS["ap_swap"])]
    assert first == second


@pytest.mark.parametrize(
    "mutant, check",
    [
        ("map_drop_node", check_functor_laws),
        ("map_drop_node", check_applicative_laws),
        ("r2l_no_flip", check_iso),
        ("r2l_no_flip", check_naturality),
        ("ap_swap", check_adjunction),
        ("one_twice", check_adjunction),
        ("lift_t_skip_last", check_adjunction),
    ],
)
def test_mutants_are_caught(mutant, check):
    report = check(GenConfig(), MUTANTS[mutant])
    assert not report.passed
    assert report.cases <= 200
    assert report.counterexample


def test_report_rendering():
    assert LawReport("x", 3).render() == "PASS x (3 cases)"
    failed = LawReport("x", 2, "[identity] u=Pure(0)")
    assert not failed.passed
    assert failed.render() == "FAIL x (2 cases)\n  counterexample: [identity] u=Pure(0)"


def test_default_config_keeps_enumeration_small():
    config = GenConfig()
    assert config.result_domain_size ** config.max_size <= 10_000
