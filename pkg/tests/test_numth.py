"""Unit groups, Legendre symbols and Dirichlet character matching."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlat.numth import (
    CharacterMatchError,
    DirichletCharacter,
    all_characters,
    euler_phi,
    is_prime,
    legendre,
    matching_characters,
    unit_group,
)


@given(st.integers(1, 400))
@settings(max_examples=120, deadline=None)
def test_totient_matches_gcd_count(n):
    assert euler_phi(n) == sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def test_legendre_known_values():
    assert legendre(1, 7) == 1
    assert legendre(2, 7) == 1
    assert legendre(5, 3) == -1
    assert legendre(21, 7) == 0
    assert legendre(-1, 5) == 1
    assert legendre(-1, 7) == -1


def test_legendre_rejects_non_prime():
    with pytest.raises(ValueError):
        legendre(3, 9)
    with pytest.raises(ValueError):
        legendre(3, 2)


@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 50), st.integers(1, 50))
@settings(max_examples=80, deadline=None)
def test_legendre_is_multiplicative(p, a, b):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@pytest.mark.parametrize("m", [3, 4, 5, 8, 9, 15, 16, 18, 24, 25, 27, 40, 49])
def test_unit_group_generates_all_units(m):
    gens = unit_group(m)
    order = 1
    for _, o in gens:
        order *= o
    assert order == euler_phi(m)
    units = {1}
    for g, o in gens:
        units = {u * pow(g, e, m) % m for u in units for e in range(o)}
    assert units == {a for a in range(m) if gcd(a, m) == 1}


def test_unit_group_structure_examples():
    assert sorted(o for _, o in unit_group(16)) == [2, 4]
    assert [o for _, o in unit_group(25)] == [20]
    assert [o for _, o in unit_group(3)] == [2]


def test_character_count_and_multiplicativity():
    for m in (9, 16, 25):
        chars = all_characters(m)
        assert len(chars) == euler_phi(m)
        chi = chars[3]
        units = [a for a in range(1, m) if gcd(a, m) == 1]
        for a in units[:6]:
            for b in units[:6]:
                ta, tb = chi.exponent_at(a), chi.exponent_at(b)
                assert chi.exponent_at(a * b) == (ta + tb) % 1


def test_character_values_off_units_vanish():
    chi = DirichletCharacter(16, (0, 1))
    assert chi.exponent_at(2) is None
    assert chi(4) == 0


def test_principal_character():
    chi = all_characters(16)[0]
    assert all(chi(p) == 1 for p in (3, 5, 7, 11, 13))


def test_matching_character_a1():
    chi = matching_characters(4**6, 3, 16)[0]
    assert chi.is_real()
    assert chi(-1) == -1
    for p in (3, 5, 7, 11, 13, 17, 19, 97):
        assert chi(p) == (1 if p % 4 == 1 else -1)


def test_matching_character_a2():
    chi = matching_characters(5**9, 6, 25)[0]
    assert chi.is_real()
    assert chi(-1) == 1
    for p in (2, 3, 7, 11, 13, 17, 19, 23, 29):
        if p != 2:
            assert chi(p) == legendre(5, p)


def test_matching_parity_equals_weight_sign():
    # chi(-1) = (-1)^s for every table case that identifies a character
    for det, s, level in ((4**6, 3, 16), (5**9, 6, 25), (6**12, 10, 18)):
        chi = matching_characters(det, s, level)[0]
        assert chi(-1) == (-1) ** s


def test_matching_failure_raises():
    # wrong level for the first table row: no single real character fits
    with pytest.raises(CharacterMatchError):
        matching_characters(4**6, 3, 7)
    with pytest.raises(ValueError):
        matching_characters(4**6, 3, 16, prime_bound=10)


def test_exponent_values_are_exact_roots_of_unity():
    for chi in all_characters(25)[:8]:
        for a in (2, 3, 4, 6):
            t = chi.exponent_at(a)
            assert isinstance(t, Fraction)
            assert 0 <= t < 1
            assert (t * chi.order).denominator == 1


def test_is_prime():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
