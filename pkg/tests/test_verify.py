import json

import pytest

from intertwining.verify import (SCHEMA, Entry, Report, check_algebra, check_casimir, check_factorization,
                                 check_intertwining, check_lattice, check_quadratic_algebra, check_states,
                                 coverage, default_seed, identity_catalog, run_full_suite, so6_level_count,
                                 su3_dimension)


@pytest.fixture(scope="module")
def hyperboloid_report():
    return run_full_suite("hyperboloid", [(1, 0, -4)], seed=11)


def test_entry_pass_logic():
    assert Entry("x", "l", "s", 1e-12, 1e-9).passed
    assert not Entry("x", "l", "s", 2e-9, 1e-9).passed
    assert not Entry("x", "l", "s", float("nan"), 1e-9).passed


def test_empty_sweep():
    rep = run_full_suite("sphere", [])
    assert rep.entries == [] and rep.passed


def test_full_suite_hyperboloid(hyperboloid_report):
    rep = hyperboloid_report
    assert rep.passed, [e.identity for e in rep.failures()]
    assert coverage(rep, "hyperboloid", [(1, 0, -4)]) == []
    assert rep.entries[-1].identity == "coverage"


def test_catalog_matches_entries(hyperboloid_report):
    ids = identity_catalog("hyperboloid", (1, 0, -4))
    assert len(ids) == len(set(ids))
    assert {e.identity for e in hyperboloid_report.entries} >= set(ids)


def test_coverage_detects_missing(hyperboloid_report):
    rep = Report("full", "hyperboloid", [], 11, [e for e in hyperboloid_report.entries
                                                   if e.identity != "intertwining A+"])
    probs = coverage(rep, "hyperboloid", [(1, 0, -4)])
    assert probs == ["intertwining A+ at (1,0,-4): 0 entries"]


def test_report_is_deterministic():
    a = check_intertwining("sphere", (1, 0, 2), seed=5).to_json(timing=False)
    b = check_intertwining("sphere", (1, 0, 2), seed=5).to_json(timing=False)
    assert a == b
    doc = json.loads(a)
    assert doc["schema"] == SCHEMA and len(doc["entries"]) == 12


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("INTERTWINING_SEED", "77")
    assert default_seed() == 77


@pytest.mark.parametrize("system,ell", [("hyperboloid", (0, 0, -3)), ("sphere", (0, 0, 2)),
                                        ("hyperboloid", ("1/3", "2/5", "-3/7"))])
def test_operator_suites(system, ell):
    for rep in (check_factorization(system, ell), check_intertwining(system, ell)):
        assert rep.passed


@pytest.mark.parametrize("name", ["su2_A", "su2_tildeA", "su11_B", "su11_C", "su21", "su3", "so6_derived"])
def test_algebra_tables(name):
    system = "sphere" if name == "su3" else "hyperboloid"
    ell = (1, 0, 2) if system == "sphere" else (1, 0, -4)
    rep = check_algebra(name, system, ell)
    assert rep.passed, [e.identity for e in rep.failures()]


def test_unknown_algebra():
    with pytest.raises(ValueError):
        check_algebra("g2")


@pytest.mark.parametrize("system,ell", [("hyperboloid", (1, 0, -4)), ("sphere", (1, 0, 1))])
def test_state_suites(system, ell):
    for rep in (check_casimir(system, ell), check_states(system, ell), check_lattice(system, ell)):
        assert rep.passed, [e.identity for e in rep.failures()]


def test_quadratic_variants():
    exact = check_quadratic_algebra(variant="exact")
    assert exact.passed
    stated = check_quadratic_algebra(variant="stated")
    bad = sorted(e.identity for e in stated.failures())
    assert len(bad) == 4 and all("X2" in b or "X3" in b for b in bad)
    assert stated.find("quadratic energy preservation")[0].passed


def test_count_oracles():
    assert [so6_level_count(q) for q in range(4)] == [1, 6, 20, 50]
    assert [su3_dimension(*mn) for mn in [(1, 0), (1, 1), (2, 0), (3, 0)]] == [3, 8, 6, 10]


def test_jacobi_detects_a_corrupted_table():
    from intertwining.ladders import H, Letter
    from intertwining.systems import System
    from intertwining.verify import _hyperboloid_closure, _jacobi_entries, _merge, _spec
    merged, conflicts = _merge(_hyperboloid_closure())
    assert conflicts == 0
    merged[(Letter("A", "+"), Letter("B", "-"))] = -H("C+")
    e = _jacobi_entries(System.HYPERBOLOID, merged, (1, 0, -4), _spec(System.HYPERBOLOID, 1), 1, "x")[0]
    assert not e.passed
