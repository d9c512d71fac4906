"""Fusion recursion and alcove bookkeeping."""

import numpy as np
import pytest

from hyperlat.fusion import (
    FusionError,
    alcove,
    build_alcove_fusion,
    builtin_A_generator,
    triality,
)


def test_alcove_counts():
    for k in range(7):
        assert len(alcove(k)) == (k + 1) * (k + 2) // 2


def test_alcove_order_is_by_total_degree():
    verts = alcove(2)
    assert verts == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_triality_values():
    assert triality(0, 0) == 0
    assert triality(1, 0) == 1
    assert triality(0, 1) == 2
    assert triality(2, 2) == 0


def test_builtin_generator_respects_triality_grading():
    for k in (1, 2, 3, 5):
        adj, tri = builtin_A_generator(k)
        verts = alcove(k)
        assert adj.shape == (len(verts), len(verts))
        assert tri == tuple(triality(p, q) for p, q in verts)
        for a in range(len(verts)):
            for b in range(len(verts)):
                if adj[a, b]:
                    assert (tri[b] - tri[a]) % 3 == 1


def test_identity_and_transpose_structure():
    k = 3
    adj, _ = builtin_A_generator(k)
    table = build_alcove_fusion(adj, k)
    n = adj.shape[0]
    assert np.array_equal(table[(0, 0)], np.eye(n, dtype=np.int64))
    assert np.array_equal(table[(1, 0)], adj)
    for p, q in alcove(k):
        assert np.array_equal(table[(q, p)], table[(p, q)].T)


def test_fusion_matrices_commute():
    k = 2
    adj, _ = builtin_A_generator(k)
    table = build_alcove_fusion(adj, k)
    mats = list(table.entries.values())
    for A in mats:
        for B in mats:
            assert np.array_equal(A @ B, B @ A)


def test_fusion_ring_structure_constants():
    # multiplicities from the full Verlinde-style product: the matrix of
    # weight w acting on the vacuum row recovers the alcove decomposition
    k = 2
    adj, _ = builtin_A_generator(k)
    table = build_alcove_fusion(adj, k)
    verts = alcove(k)
    vac = verts.index((0, 0))
    for i, w in enumerate(verts):
        row = table[w][vac]
        assert row[i] == 1 and row.sum() == 1


def test_invalid_generator_raises():
    with pytest.raises(FusionError):
        build_alcove_fusion(np.zeros((2, 3), dtype=np.int64), 1)
    with pytest.raises(FusionError):
        build_alcove_fusion(np.array([[0, -1], [0, 0]]), 1)
    # a nilpotent non-module generator drives the recursion negative
    with pytest.raises(FusionError):
        build_alcove_fusion(np.array([[0, 1], [0, 0]]), 2)
