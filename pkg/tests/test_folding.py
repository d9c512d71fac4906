"""Signed folding into the alcove and the extended periodic family."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlat.folding import ExtendedFusion, fold
from hyperlat.fusion import build_alcove_fusion, builtin_A_generator


def brute_fold(p, q, N, rng):
    """Apply whichever violated reflection the rng picks, until reduced."""
    sign = 1
    p %= 3 * N
    q %= 3 * N
    for _ in range(10_000):
        if p % N == 0 or q % N == 0 or (p + q) % N == 0:
            return 0, None
        moves = []
        if p < 0:
            moves.append(lambda p=p, q=q: (-p, p + q))
        if q < 0:
            moves.append(lambda p=p, q=q: (p + q, -q))
        if p + q > N:
            moves.append(lambda p=p, q=q: (N - q, N - p))
        if not moves:
            return sign, (p, q)
        p, q = rng.choice(moves)()
        sign = -sign
    raise RuntimeError("unreachable")


@given(
    st.integers(-60, 60),
    st.integers(-60, 60),
    st.sampled_from([4, 5, 6, 8]),
    st.integers(0, 2**30),
)
@settings(max_examples=300, deadline=None)
def test_fold_is_path_independent(p, q, N, seed):
    rng = random.Random(seed)
    assert fold(p, q, N) == brute_fold(p, q, N, rng)


def test_fold_periodicity_and_antisymmetry():
    N = 5
    for p in range(-N, 3 * N):
        for q in range(-N, 3 * N):
            s, w = fold(p, q, N)
            assert fold(p + 3 * N, q, N) == (s, w)
            assert fold(p, q + 3 * N, N) == (s, w)
            assert fold(-p, p + q, N) == (-s, w) if s else fold(-p, p + q, N)[0] == 0
            assert fold(p + q, -q, N) == (-s, w) if s else fold(p + q, -q, N)[0] == 0
            assert fold(N - q, N - p, N) == (-s, w) if s else True


def test_fold_wall_points_vanish():
    N = 6
    for t in range(3 * N):
        assert fold(0, t, N) == (0, None)
        assert fold(t, 0, N) == (0, None)
        assert fold(t, N - t, N) == (0, None)


def test_fold_fixes_alcove_interior():
    N = 7
    for p in range(1, N):
        for q in range(1, N - p):
            assert fold(p, q, N) == (1, (p, q))


def test_fold_rejects_tiny_altitude():
    with pytest.raises(ValueError):
        fold(1, 1, 2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_extended_family_on_full_period(k):
    adj, _ = builtin_A_generator(k)
    table = build_alcove_fusion(adj, k)
    ext = ExtendedFusion(table)
    N = k + 3
    for p in range(3 * N):
        for q in range(3 * N):
            M = ext.matrix(p, q)
            assert np.array_equal(ext.matrix(p + 3 * N, q), M)
            assert np.array_equal(ext.matrix(-p, p + q), -M)
            assert np.array_equal(ext.matrix(p + q, -q), -M)
            if p % N == 0 or q % N == 0 or (p + q) % N == 0:
                assert not M.any()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_twist_is_an_order_three_permutation(k):
    adj, _ = builtin_A_generator(k)
    ext = ExtendedFusion(build_alcove_fusion(adj, k))
    P = ext.twist_P()
    n = adj.shape[0]
    assert ((P == 0) | (P == 1)).all()
    assert np.array_equal(P @ P @ P, np.eye(n, dtype=np.int64))
