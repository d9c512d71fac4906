"""Theta enumeration against a naive oracle and series cross-checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlat.catalog import get_module
from hyperlat.ribbon import RootSystem
from hyperlat.theta import (
    ThetaSeries,
    jacobi_theta_combination,
    kissing_term,
    shell_vectors,
    theta_coefficients,
)
from hyperlat.verify import naive_theta


@pytest.fixture(scope="module")
def a1_gram():
    return RootSystem(get_module("A", 1)).gram()


def random_even_posdef(rng: np.random.Generator, n: int) -> np.ndarray:
    """Even positive definite Gram B^T B + B B^T style, small entries."""
    B = rng.integers(-2, 3, size=(n, n))
    A = B @ B.T + 2 * np.eye(n, dtype=np.int64)
    return (A + A.T).astype(np.int64)  # doubles: even diagonal guaranteed


@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_enumerator_matches_naive_oracle(seed, n, max_index):
    rng = np.random.default_rng(seed)
    A = random_even_posdef(rng, n)
    assert theta_coefficients(A, max_index).coefficients == naive_theta(A, max_index)


def test_enumerator_matches_oracle_on_a1(a1_gram):
    assert theta_coefficients(a1_gram, 6).coefficients == naive_theta(a1_gram, 6)


def test_zero_vector_only_at_index_zero(a1_gram):
    assert theta_coefficients(a1_gram, 0).coefficients == (1,)


def test_thread_invariance(a1_gram):
    base = theta_coefficients(a1_gram, 20, threads=1).coefficients
    for threads in (2, 3, 8):
        assert theta_coefficients(a1_gram, 20, threads=threads).coefficients == base


def test_rejects_bad_gram():
    with pytest.raises(ValueError):
        theta_coefficients([[1, 2], [2, 1]], 3)
    with pytest.raises(ValueError):
        theta_coefficients([[2, 1], [0, 2]], 3)
    with pytest.raises(ValueError):
        theta_coefficients([[2]], -1)


def test_kissing_term(a1_gram):
    assert kissing_term(a1_gram) == (6, 32)
    assert kissing_term([[2, -1], [-1, 2]]) == (2, 6)


def test_theta_series_kissing_accessor():
    s = ThetaSeries((1, 0, 0, 32))
    assert s.kissing() == (6, 32)
    with pytest.raises(ValueError):
        ThetaSeries((1, 0, 0)).kissing()


def test_shell_vectors_consistency(a1_gram):
    shells = shell_vectors(a1_gram, 5)
    series = theta_coefficients(a1_gram, 5).coefficients
    for norm, vectors in shells.items():
        assert norm % 2 == 0
        assert len(vectors) == series[norm // 2]
        norms = np.einsum("ij,jk,ik->i", vectors, a1_gram, vectors)
        assert (norms == norm).all()
    # closed under negation
    six = {tuple(v) for v in shells[6]}
    assert six == {tuple(-x for x in v) for v in six}


def test_jacobi_combination_prefix():
    # classical expansion of the D6+ theta in the doubled-index convention
    got = jacobi_theta_combination(8)
    assert got == (1, 0, 0, 32, 60, 0, 0, 192, 252)
