"""Randomized suite harness: determinism, tallies, thread behaviour."""

import pytest

from nullcore.verify import (
    SUITES,
    SuiteResult,
    VerifySuiteConfig,
    run_suite,
    thread_count,
)


def test_config_validation():
    VerifySuiteConfig("trees", 5, 5, 0)
    VerifySuiteConfig("all", 1, 1, 0)
    with pytest.raises(ValueError):
        VerifySuiteConfig("nope", 5, 5, 0)
    with pytest.raises(ValueError):
        VerifySuiteConfig("trees", 0, 5, 0)
    with pytest.raises(ValueError):
        VerifySuiteConfig("trees", 5, 0, 0)


def test_each_suite_runs_clean():
    for suite in SUITES:
        result = run_suite(VerifySuiteConfig(suite, 8, 12, 99))
        assert result.ok, (suite, result.counterexamples)
        assert result.counterexamples == ()
        for name in result.tallies:
            assert name.startswith(suite + "/")


def test_all_suite_covers_everything():
    result = run_suite(VerifySuiteConfig("all", 7, 8, 5))
    assert result.ok
    prefixes = {name.split("/")[0] for name in result.tallies}
    assert prefixes == set(SUITES)
    lines = result.summary_lines()
    assert lines == sorted(lines)
    assert all("pass" in line for line in lines)


def test_runs_are_reproducible():
    cfg = VerifySuiteConfig("trees", 9, 20, 123)
    assert run_suite(cfg).tallies == run_suite(cfg).tallies


def test_different_seeds_differ():
    a = run_suite(VerifySuiteConfig("trees", 10, 25, 1)).tallies
    b = run_suite(VerifySuiteConfig("trees", 10, 25, 2)).tallies
    assert a != b  # singular-tree counts almost surely differ


def test_thread_pool_keeps_results_identical(monkeypatch):
    cfg = VerifySuiteConfig("perturbations", 7, 10, 31)
    monkeypatch.delenv("NULLCORE_THREADS", raising=False)
    serial = run_suite(cfg)
    assert thread_count() == 1
    monkeypatch.setenv("NULLCORE_THREADS", "4")
    assert thread_count() == 4
    threaded = run_suite(cfg)
    assert serial.tallies == threaded.tallies
    monkeypatch.setenv("NULLCORE_THREADS", "junk")
    assert thread_count() == 1


def test_suite_result_flags_failures():
    bad = SuiteResult(
        VerifySuiteConfig("trees", 5, 1, 0),
        {"trees/x": [3, 1]},
        (),
    )
    assert not bad.ok
    assert bad.summary_lines() == ["trees/x: 3 pass, 1 fail"]
