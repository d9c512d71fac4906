"""Higher roots: ribbon, inner products, bases and expansions."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlat.catalog import get_module
from hyperlat.lattice import determinant, smith_normal_form
from hyperlat.ribbon import RibbonPoint, RootSystem, position_triality
from hyperlat.theta import theta_coefficients


@pytest.fixture(scope="module")
def a1():
    return RootSystem(get_module("A", 1))


@pytest.fixture(scope="module")
def a2():
    return RootSystem(get_module("A", 2))


@pytest.fixture(scope="module")
def d3():
    return RootSystem(get_module("D", 3))


def test_ribbon_size_formula(a1, a2, d3):
    for rs in (a1, a2, d3):
        N, r = rs.N, rs.rank
        assert len(rs.ribbon()) == r * N * N // 3


def test_ribbon_admissibility(a2):
    for pt in a2.ribbon():
        p, q = pt.pos
        assert (position_triality(p, q) + a2.module.trialities[pt.vertex]) % 3 == 0


def test_all_roots_have_norm_six(a1, a2, d3):
    for rs in (a1, a2, d3):
        for pt in rs.ribbon():
            assert rs.inner(pt, pt) == 6


def test_inner_product_symmetry(a2):
    pts = a2.ribbon()[:12]
    for x in pts:
        for y in pts:
            assert a2.inner(x, y) == a2.inner(y, x)


@given(st.integers(-12, 12), st.integers(-12, 12), st.integers(0, 30), st.integers(0, 30))
@settings(max_examples=60, deadline=None)
def test_inner_product_translation_invariance(a2, dp, dq, i, j):
    pts = a2.ribbon()
    x, y = pts[i % len(pts)], pts[j % len(pts)]
    shift = lambda pt: RibbonPoint((pt.pos[0] + dp, pt.pos[1] + dq), pt.vertex)
    assert a2.inner(x, y) == a2.inner(shift(x), shift(y))


def test_level_zero_gram_is_three_cartan():
    rs = RootSystem(get_module("A", 0))
    assert np.array_equal(rs.gram(), np.array([[6, -3], [-3, 6]]))


def test_bases_give_equivalent_lattices(a2):
    grams = {b: a2.gram(a2.basis(b)) for b in ("B1", "B2", "B3")}
    dets = {determinant(G) for G in grams.values()}
    assert dets == {5**9}
    snfs = {smith_normal_form(G) for G in grams.values()}
    assert len(snfs) == 1
    thetas = {theta_coefficients(G, 5).coefficients for G in grams.values()}
    assert len(thetas) == 1


def test_basis_size(a1, a2, d3):
    for rs in (a1, a2, d3):
        for which in ("B1", "B2", "B3"):
            assert len(rs.basis(which)) == 2 * rs.rank


def test_big_gram_rank(a1):
    big, rank = a1.big_gram()
    assert big.shape == (16, 16)
    assert rank == 6


def test_expansions_reconstruct_inner_products(a1):
    coords = a1.expansions()
    G = a1.gram()
    pts = a1.ribbon()
    big, _ = a1.big_gram()
    assert np.array_equal(coords @ G @ coords.T, big)
    assert len(pts) == coords.shape[0]


def test_harmonicity_of_sample_roots(a2):
    for pt in a2.ribbon()[:3]:
        assert a2.harmonicity_check(pt)
