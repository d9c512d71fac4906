"""Acceptance gate: every published reference value, one criterion per test.

Each test drives the corresponding golden check from `hyperlat.verify`
through a session-shared cache, so the nine module lattices are built
once for the whole gate.
"""

import os

import numpy as np
import pytest

from hyperlat import golden, verify
from hyperlat.catalog import get_module
from hyperlat.ribbon import RootSystem
from hyperlat.theta import theta_coefficients

TABLE_ROWS = tuple(golden.TABLE)


@pytest.fixture(scope="session")
def cache():
    return verify._Cache()


def assert_all(results):
    failures = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    assert not failures, "; ".join(failures)
    assert results, "check produced no results"


def test_criterion_1_root_counts(cache):
    assert_all(verify.check_root_counts(cache, TABLE_ROWS))
    # the restricted counts themselves
    for row, want in golden.RESTRICTED_ROOT_COUNTS.items():
        assert len(cache.system(row).ribbon()) == want


def test_criterion_2_gram_golden(cache):
    results = verify.check_gram_golden(cache, TABLE_ROWS)
    assert_all(results)
    assert len(results) == 6  # congruence + determinant for A1, A2, A3


def test_criterion_3_invariants_table(cache):
    results = verify.check_invariants_table(cache, TABLE_ROWS)
    assert_all(results)
    assert len(results) == 9


def test_criterion_4_dual_quotients(cache):
    assert_all(verify.check_dual_quotients(cache, TABLE_ROWS))


def test_criterion_5_theta_prefixes_fast(cache):
    rows = [r for r in verify.ALL_ROWS if r not in ("A3", "A4", "D6", "E21")]
    assert_all(verify.check_theta_prefixes(cache, rows, slow=False))


@pytest.mark.parametrize("row", ["A3", "A4", "D6", "E21"])
def test_criterion_5_theta_prefixes_slow(cache, row):
    assert_all(verify.check_theta_prefixes(cache, (row,), slow=True))


@pytest.mark.slow
@pytest.mark.skipif(
    not os.environ.get("HYPERLAT_RUN_DEEP"),
    reason="hours-long exact enumeration; set HYPERLAT_RUN_DEEP=1 to run",
)
def test_criterion_5_e21_fourth_coefficient(cache):
    got = theta_coefficients(cache.gram("E21"), 4, threads=8).coefficients
    assert got == golden.THETA["E21"] + (golden.E21_COEFF_4,)


def test_criterion_6_kissing_fast(cache):
    rows = [r for r in TABLE_ROWS if r not in ("A3", "A4", "D6", "E21")]
    assert_all(verify.check_kissing_classification(cache, rows, slow=False))


@pytest.mark.parametrize("row", ["A3", "A4", "D6", "E21"])
def test_criterion_6_kissing_slow(cache, row):
    assert_all(verify.check_kissing_classification(cache, (row,), slow=True))


def test_criterion_7_rank_projection(cache):
    results = verify.check_rank_projection(cache, TABLE_ROWS)
    assert_all(results)
    assert len(results) == 4  # A1, A2, A3, D3


def test_criterion_8_root_integrality(cache):
    results = verify.check_root_integrality(cache, TABLE_ROWS)
    assert_all(results)
    assert len(results) == 9


def test_criterion_9_characters(cache):
    results = verify.check_characters(cache, TABLE_ROWS)
    assert_all(results)
    assert len(results) == 2


def test_criterion_10_series_identities(cache):
    assert_all(verify.check_series_identities(cache, TABLE_ROWS))


def test_criterion_11_property_suites(cache):
    assert_all(verify.check_property_suites(cache, TABLE_ROWS, slow=True))


def test_bundled_data_certified_against_table(cache):
    # loading already validates the fusion/folding pipeline; the invariants
    # check above certifies the lattices, so here just pin the files' shape
    for row in ("D3", "D6", "E5", "E9", "E21"):
        name, k = verify.MODULE_KEYS[row]
        mod = get_module(name, k)
        assert mod.rank == golden.TABLE[row].lattice_rank // 2
        assert mod.level == golden.TABLE[row].level
        assert np.asarray(mod.adjacency).min() >= 0
