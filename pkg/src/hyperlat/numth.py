"""Characters and symbols for the modular-form identification of a theta series.

The theta series of an even lattice of rank 2s, determinant detA and
modular level l is a weight-s form twisted by the Dirichlet character
mod l that agrees with the Legendre symbol of the discriminant on odd
primes.  This module finds that character exactly: unit groups are
decomposed into cyclic factors, characters are exponent tuples against
the generators, and values are roots of unity represented by their
exact fractional exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd


class CharacterMatchError(ValueError):
    """The Legendre matching did not isolate a single real character."""


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def euler_phi(n: int) -> int:
    """Totient via trial factorization."""
    if n < 1:
        raise ValueError("totient is defined for positive integers")
    phi = 1
    for p, a in _factorize(n).items():
        phi *= (p - 1) * p ** (a - 1)
    return phi


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _primitive_root(p: int, a: int) -> int:
    # primitive root mod p, lifted to p^a
    target = p - 1
    factors = _factorize(target)
    g = 2
    while any(pow(g, target // q, p) == 1 for q in factors):
        g += 1
    if a > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def unit_group(modulus: int) -> list[tuple[int, int]]:
    """Cyclic decomposition of (Z/modulus)*: list of (generator, order) pairs.

    Generators are lifted through the Chinese remainder theorem so that
    each one is trivial in every other prime-power block; the product of
    the orders is phi(modulus).
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    blocks: list[tuple[int, list[tuple[int, int]]]] = []
    for p, a in sorted(_factorize(modulus).items()):
        pa = p**a
        if p == 2:
            if a == 2:
                blocks.append((pa, [(3, 2)]))
            elif a >= 3:
                blocks.append((pa, [(pa - 1, 2), (5, 2 ** (a - 2))]))
            # 2^1 contributes a trivial group
        else:
            g = _primitive_root(p, a)
            blocks.append((pa, [(g, (p - 1) * p ** (a - 1))]))
    gens: list[tuple[int, int]] = []
    for pa, local in blocks:
        rest = modulus // pa
        for g, order in local:
            if rest == 1:
                lifted = g % modulus
            else:
                # x = g mod pa, x = 1 mod rest
                inv = pow(pa, -1, rest)
                lifted = (g + pa * ((1 - g) * inv % rest)) % modulus
            gens.append((lifted, order))
    assert _prod(o for _, o in gens) == euler_phi(modulus)
    return gens


def _prod(items) -> int:
    out = 1
    for x in items:
        out *= x
    return out


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod `modulus`, as exponents against the unit-group generators.

    The value at a unit u with decomposition u = prod g_i^{x_i} is the
    root of unity exp(2 pi i * sum_i exponents_i x_i / order_i); it is
    returned as the exact fractional exponent (mod 1), with None at
    non-units.
    """

    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        gens = unit_group(self.modulus)
        if len(self.exponents) != len(gens):
            raise ValueError("exponent tuple does not match the unit-group rank")
        # discrete-log table for the whole unit group
        table: dict[int, tuple[int, ...]] = {}
        for combo in product(*(range(order) for _, order in gens)):
            u = 1
            for (g, _), x in zip(gens, combo):
                u = u * pow(g, x, self.modulus) % self.modulus
            table.setdefault(u, combo)
        object.__setattr__(self, "_generators", tuple(gens))
        object.__setattr__(self, "_dlog", table)

    @property
    def order(self) -> int:
        out = 1
        for e, (_, order) in zip(self.exponents, self._generators):
            d = gcd(e, order)
            out = out * (order // d) // gcd(out, order // d)
        return out

    def is_real(self) -> bool:
        return all(
            (2 * e) % order == 0
            for e, (_, order) in zip(self.exponents, self._generators)
        )

    def exponent_at(self, n: int) -> Fraction | None:
        """Fractional exponent t with value exp(2 pi i t); None off the units."""
        combo = self._dlog.get(n % self.modulus)
        if combo is None:
            return None
        t = Fraction(0)
        for e, x, (_, order) in zip(self.exponents, combo, self._generators):
            t += Fraction(e * x, order)
        return t % 1

    def __call__(self, n: int) -> int:
        """Exact value at n for real characters (0 off units)."""
        t = self.exponent_at(n)
        if t is None:
            return 0
        if t == 0:
            return 1
        if t == Fraction(1, 2):
            return -1
        raise ValueError("character value is not real; use exponent_at")


def all_characters(modulus: int) -> list[DirichletCharacter]:
    """The phi(modulus) Dirichlet characters, in exponent-tuple order."""
    gens = unit_group(modulus)
    return [
        DirichletCharacter(modulus, combo)
        for combo in product(*(range(order) for _, order in gens))
    ]


def matching_characters(
    det_a: int, s: int, level: int, prime_bound: int = 100
) -> list[DirichletCharacter]:
    """The character mod `level` agreeing with the discriminant's Legendre symbol.

    Matches chi(p) against legendre((-1)^s * det_a, p) over all odd
    primes p <= prime_bound coprime to the level; the search must
    isolate exactly one character and it must be real, otherwise the
    upstream (det, level) pair is inconsistent.
    """
    if prime_bound < 50:
        raise ValueError("prime bound must be at least 50")
    disc = (-1) ** s * det_a
    primes = [
        p for p in range(3, prime_bound + 1) if is_prime(p) and level % p != 0
    ]
    targets = {p: legendre(disc, p) for p in primes}
    matches = []
    for chi in all_characters(level):
        if all(chi.exponent_at(p) in (Fraction(0), Fraction(1, 2)) for p in primes) and all(
            chi(p) == t for p, t in targets.items()
        ):
            matches.append(chi)
    real = [chi for chi in matches if chi.is_real()]
    if len(matches) != 1 or not real:
        raise CharacterMatchError(
            f"expected one real matching character mod {level}, found {len(matches)}"
        )
    return matches
