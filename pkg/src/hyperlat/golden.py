"""Frozen reference data for the golden verification suite.

Every value here was transcribed from the published reference tables and
coefficient lists for the higher-root lattices of SU(3) quantum modules;
the `cite` fields name the table or list a value came from.  Nothing in
this module is computed: it is the read-only half of every golden
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRow:
    """One row of the published invariants table."""

    name: str
    level: int
    altitude: int
    rank: int  # number of module vertices r_E
    lattice_rank: int  # 2 r_E
    root_count: int  # |R|, both signs
    kissing: tuple[int, int]  # (norm, count) of the first shell
    determinant: int
    modular_level: int
    phi_level: int
    cite: str


#: the published invariants table, one entry per module.
#: For E9 the published modular-level column reads 16 with totient 8;
#: 16 is a level of the theta series but not the minimal one: the exact
#: minimal level of the certified Gram matrix is 8 (its theta series,
#: determinant, divisor chain, root count and kissing term all match the
#: published data).  The minimal value is recorded here.
TABLE = {
    "A1": TableRow("A1", 1, 4, 3, 6, 32, (6, 32), 4**6, 16, 8, "invariants table"),
    "A2": TableRow("A2", 2, 5, 6, 12, 100, (6, 100), 5**9, 25, 20, "invariants table"),
    "A3": TableRow("A3", 3, 6, 10, 20, 240, (6, 240), 6**12, 18, 6, "invariants table"),
    "A4": TableRow("A4", 4, 7, 15, 30, 490, (6, 490), 7**15, 49, 42, "invariants table"),
    "D3": TableRow("D3", 3, 6, 6, 12, 144, (4, 36), 3**12, 9, 6, "invariants table"),
    "D6": TableRow("D6", 6, 9, 12, 24, 648, (4, 162), 3**18, 27, 18, "invariants table"),
    "E5": TableRow("E5", 5, 8, 12, 24, 512, (6, 512), 2**30, 16, 8, "invariants table"),
    "E9": TableRow("E9", 9, 12, 12, 24, 1152, (4, 756), 2**24, 8, 4, "invariants table; minimal level, see note above"),
    "E21": TableRow("E21", 21, 24, 24, 48, 9216, (4, 144), 3**12, 3, 2, "invariants table"),
}

#: published theta coefficient prefixes, variable q2 = q^2 (index m counts
#: vectors of norm 2m).  "A0" is the rescaled level-0 lattice (Gram/3),
#: the planar hexagonal lattice, indexed by q itself.
THETA = {
    "A0": (
        1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0, 0, 6, 12, 0, 0, 6, 0, 0, 12,
        0, 12, 0, 0, 0, 6, 0, 6, 12, 0, 0, 12, 0, 0, 0, 0, 6, 12, 0, 12,
    ),
    "A1": (
        1, 0, 0, 32, 60, 0, 0, 192, 252, 0, 0, 480, 544, 0, 0, 832, 1020,
        0, 0, 1440, 1560, 0, 0, 2112, 2080, 0, 0, 2624, 3264, 0, 0, 3840,
        4092, 0, 0, 4992, 4380, 0, 0, 5440,
    ),
    "A2": (
        1, 0, 0, 100, 450, 960, 2800, 6600, 12300, 22400, 30690, 63000,
        93150, 144000, 203100, 236080, 392850, 550800, 708350, 961800,
    ),
    "A3": (1, 0, 0, 240, 1782, 9072, 59328, 216432),
    "A4": (1, 0, 0, 490, 4998, 45864),
    "A5": (1, 0, 0, 896),
    "A6": (1, 0, 0, 1512),
    "D3": (1, 0, 36, 144, 486, 2880, 5724, 7776, 31068, 40320),
    "D6": (1, 0, 162, 2322, 35478, 273942),
    "E5": (1, 0, 0, 512, 11232, 145920),
    "E9": (1, 0, 756, 5760, 98928),
    "E21": (1, 0, 144, 64512),
}

#: deeper E21 coefficient; its exact check needs a long enumeration
E21_COEFF_4 = 54181224

#: restricted higher-root counts |R^v| = |R| / 2 for the A-series rows
RESTRICTED_ROOT_COUNTS = {"A1": 16, "A2": 50, "A3": 120, "A4": 245}

#: printed 6x6 Gram matrix of the first A-series module, basis B1
A1_GRAM = (
    (6, 2, 2, -2, -2, -2),
    (2, 6, 2, 2, -2, 2),
    (2, 2, 6, 2, 2, -2),
    (-2, 2, 2, 6, 2, 2),
    (-2, -2, 2, 2, 6, -2),
    (-2, 2, -2, 2, -2, 6),
)

#: printed inverse: A1_GRAM^-1 = A1_INVERSE_NUMERATOR / 8
A1_INVERSE_NUMERATOR = (
    (3, -1, -1, 1, 1, 1),
    (-1, 3, -1, -1, 1, -1),
    (-1, -1, 3, -1, -1, 1),
    (1, -1, -1, 3, -1, -1),
    (1, 1, -1, -1, 3, 1),
    (1, -1, 1, -1, 1, 3),
)

#: elementary divisors of A1_GRAM and of its rescaled half
A1_SNF = (2, 4, 4, 4, 4, 8)
A1_RESCALED_SNF = (1, 2, 2, 2, 2, 4)
A1_RESCALED_QUOTIENT_ORDER = 64

#: printed expansions of the 16 restricted higher roots on basis B1
A1_ROOT_EXPANSIONS = (
    (1, -1, 0, 0, 0, 1),
    (0, -1, 1, 0, -1, 0),
    (-1, 0, 1, -1, 0, 0),
    (0, 0, 0, -1, 1, 1),
    (0, 0, 0, 0, 0, 1),
    (0, -1, 0, 1, -1, 0),
    (-1, 0, 0, 0, -1, -1),
    (-1, 1, 0, -1, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (0, 0, -1, 1, 0, -1),
    (0, 1, -1, 0, 0, -1),
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (1, 0, -1, 0, 1, 0),
)

#: printed 12x12 Gram matrix of the second A-series module, basis B1
A2_GRAM = (
    (6, 0, 2, 0, 2, 0, -2, 1, -2, 2, -2, 2),
    (0, 6, 2, 2, 2, 2, 1, -1, 0, -2, 0, -2),
    (2, 2, 6, 0, 2, 2, 2, 2, -1, 1, 2, 2),
    (0, 2, 0, 6, 2, 0, 0, 2, 1, -2, 2, 0),
    (2, 2, 2, 2, 6, 0, 2, 2, 2, 2, -1, 1),
    (0, 2, 2, 0, 0, 6, 0, 2, 2, 0, 1, -2),
    (-2, 1, 2, 0, 2, 0, 6, 0, 2, 0, 2, 0),
    (1, -1, 2, 2, 2, 2, 0, 6, 2, 2, 2, 2),
    (-2, 0, -1, 1, 2, 2, 2, 2, 6, 0, 0, -2),
    (2, -2, 1, -2, 2, 0, 0, 2, 0, 6, -2, 2),
    (-2, 0, 2, 2, -1, 1, 2, 2, 0, -2, 6, 0),
    (2, -2, 2, 0, 1, -2, 0, 2, -2, 2, 0, 6),
)

#: printed 20x20 Gram matrix of the third A-series module, basis B1
A3_GRAM = (
    (6, 0, 0, 0, 2, 0, 0, 2, 0, 0, -2, 1, 0, 0, -2, 2, 0, -2, 2, 0),
    (0, 6, 0, 0, 2, 2, 2, 2, 2, 2, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 6, 0, 0, 0, 2, 0, 2, 0, 0, 1, -2, 0, 2, 0, -2, 0, -2, 2),
    (0, 0, 0, 6, 0, 2, 0, 0, 0, 2, 0, 1, 0, -2, 0, -2, 2, 2, 0, -2),
    (2, 2, 0, 0, 6, 0, 0, 2, 2, 0, 2, 2, 0, 0, -1, 1, 1, 2, 2, 0),
    (0, 2, 0, 2, 0, 6, 0, 2, 0, 2, 0, 2, 0, 2, 1, -1, 1, 2, 0, 2),
    (0, 2, 2, 0, 0, 0, 6, 0, 2, 2, 0, 2, 2, 0, 1, 1, -1, 0, 2, 2),
    (2, 2, 0, 0, 2, 2, 0, 6, 0, 0, 2, 2, 0, 0, 2, 2, 0, -1, 1, 1),
    (0, 2, 2, 0, 2, 0, 2, 0, 6, 0, 0, 2, 2, 0, 2, 0, 2, 1, -1, 1),
    (0, 2, 0, 2, 0, 2, 2, 0, 0, 6, 0, 2, 0, 2, 0, 2, 2, 1, 1, -1),
    (-2, 1, 0, 0, 2, 0, 0, 2, 0, 0, 6, 0, 0, 0, 2, 0, 0, 2, 0, 0),
    (1, 0, 1, 1, 2, 2, 2, 2, 2, 2, 0, 6, 0, 0, 2, 2, 2, 2, 2, 2),
    (0, 1, -2, 0, 0, 0, 2, 0, 2, 0, 0, 0, 6, 0, 0, 0, 2, 0, 2, 0),
    (0, 1, 0, -2, 0, 2, 0, 0, 0, 2, 0, 0, 0, 6, 0, 2, 0, 0, 0, 2),
    (-2, 0, 2, 0, -1, 1, 1, 2, 2, 0, 2, 2, 0, 0, 6, 0, 0, 0, -2, 2),
    (2, 0, 0, -2, 1, -1, 1, 2, 0, 2, 0, 2, 0, 2, 0, 6, 0, -2, 2, 0),
    (0, 0, -2, 2, 1, 1, -1, 0, 2, 2, 0, 2, 2, 0, 0, 0, 6, 2, 0, -2),
    (-2, 0, 0, 2, 2, 2, 0, -1, 1, 1, 2, 2, 0, 0, 0, -2, 2, 6, 0, 0),
    (2, 0, -2, 0, 2, 0, 2, 1, -1, 1, 0, 2, 2, 0, -2, 2, 0, 0, 6, 0),
    (0, 0, 2, -2, 0, 2, 2, 1, 1, -1, 0, 2, 0, 2, 2, 0, -2, 0, 0, 6),
)

#: printed Gram matrix of the level-0 lattice (three times the SU(3) Cartan matrix)
A0_GRAM = ((6, -3), (-3, 6))

#: basis forms of the weight-3 modular-form space housing the first
#: A-series theta (q2-expansions through q2^23); entry [m] is the
#: coefficient of q2^m
B_BASIS = {
    1: {0: 1, 8: 12, 12: 64, 16: 60},
    2: {1: 1, 9: 21, 13: 40, 17: 30, 21: 72},
    3: {2: 1, 10: 26, 18: 73},
    4: {3: 1, 7: 6, 11: 15, 15: 26, 19: 45, 23: 66},
    5: {4: 1, 8: 4, 12: 8, 16: 16, 20: 26},
    6: {5: 1, 9: 2, 13: 5, 17: 10, 21: 12},
    7: {6: 1, 14: 6, 22: 15},
}

#: components of the first A-series theta on the b-basis
A1_THETA_COMPONENTS = {1: 1, 4: 32, 5: 60}


def b_basis_series(trunc: int) -> dict[int, tuple[int, ...]]:
    """The b-basis forms as dense coefficient tuples of length `trunc`.

    Only valid through q2^23; requesting more raises.
    """
    if trunc > 24:
        raise ValueError("b-basis expansions are published through q2^23 only")
    return {
        n: tuple(coeffs.get(m, 0) for m in range(trunc))
        for n, coeffs in B_BASIS.items()
    }


def a1_theta_from_b_basis(trunc: int) -> tuple[int, ...]:
    """The b-basis combination of the first A-series theta, as coefficients."""
    dense = b_basis_series(trunc)
    out = [0] * trunc
    for n, weight in A1_THETA_COMPONENTS.items():
        for m, c in enumerate(dense[n]):
            out[m] += weight * c
    return tuple(out)
