"""Exact integer/rational linear algebra for Gram matrices.

Everything here is exact: fraction-free (Bareiss) elimination over Python
integers for determinants, ranks and minors, `fractions.Fraction` for the
inverse, and sympy's Smith normal form for the dual quotient.  Floating
point never enters; discriminants up to 7^15 appear in the tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form as _sympy_snf


def _to_rows(A) -> list[list[int]]:
    return [[int(x) for x in row] for row in np.asarray(A)]


def determinant(A) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    m = _to_rows(A)
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[i][i] * m[r][c] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def exact_rank(A) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    m = _to_rows(A)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = m[row][col]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def is_positive_definite(A) -> bool:
    """Exact Sylvester criterion: all leading principal minors positive."""
    m = np.asarray(A)
    return all(determinant(m[: i + 1, : i + 1]) > 0 for i in range(m.shape[0]))


def is_even(A) -> bool:
    """Integral with even diagonal."""
    m = np.asarray(A)
    return bool((np.diag(m) % 2 == 0).all())


def rational_inverse(A) -> list[list[Fraction]]:
    """Exact inverse as a matrix of Fractions; raises on singular input."""
    n = len(A)
    m = [[Fraction(int(x)) for x in row] for row in np.asarray(A)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        inv[col] = [x / pv for x in inv[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    return inv


def modular_level(A) -> int:
    """Smallest l such that l * A^-1 is an even integral matrix."""
    K = rational_inverse(A)
    n = len(K)
    level = lcm(*(K[i][j].denominator for i in range(n) for j in range(n)))
    if any((level * K[i][i]).numerator % 2 for i in range(n)):
        level *= 2
    return level


def smith_normal_form(A) -> tuple[int, ...]:
    """Elementary divisor chain d1 | d2 | ... (nonzero divisors only)."""
    dm = DomainMatrix.from_list(_to_rows(A), ZZ)
    diag = _sympy_snf(dm).to_list()
    n = min(len(diag), len(diag[0]) if diag else 0)
    divisors = [abs(int(diag[i][i])) for i in range(n) if diag[i][i] != 0]
    return tuple(sorted(divisors))


@dataclass(frozen=True)
class LatticeInvariants:
    dimension: int
    determinant: int
    elementary_divisors: tuple[int, ...]
    modular_level: int
    is_even: bool
    is_positive_definite: bool


def invariants(A) -> LatticeInvariants:
    m = np.asarray(A)
    return LatticeInvariants(
        dimension=m.shape[0],
        determinant=determinant(m),
        elementary_divisors=smith_normal_form(m),
        modular_level=modular_level(m),
        is_even=is_even(m),
        is_positive_definite=is_positive_definite(m),
    )


def lll_reduce_gram(A, delta: float = 0.99) -> tuple[np.ndarray, np.ndarray]:
    """LLL reduction of the implicit basis of an integer Gram matrix.

    Returns (A', U) with A' = U A U^T and U unimodular; A' is the Gram
    matrix of an (approximately) LLL-reduced basis of the same lattice.
    The reduction itself runs in floating point on a Cholesky embedding
    while all basis operations are tracked in U over the integers, so
    the congruence A' = U A U^T is exact whatever the float quality;
    only the enumeration speed depends on it.  High-dimensional short
    vector enumeration is hopeless without this preprocessing.
    """
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    basis = np.linalg.cholesky(A.astype(np.float64)).T.copy()  # columns = vectors
    b = [basis[:, i].copy() for i in range(n)]
    U = np.eye(n, dtype=object)

    def gso():
        mu = np.zeros((n, n))
        star = []
        norms = np.zeros(n)
        for i in range(n):
            v = b[i].copy()
            for j in range(i):
                mu[i, j] = float(b[i] @ star[j]) / norms[j]
                v -= mu[i, j] * star[j]
            star.append(v)
            norms[i] = float(v @ v)
        return mu, norms

    mu, norms = gso()
    k = 1
    guard = 0
    while k < n and guard < 100_000:
        guard += 1
        for j in range(k - 1, -1, -1):
            r = round(mu[k, j])
            if r:
                b[k] = b[k] - r * b[j]
                U[k] -= r * U[j]
                mu[k, :j] -= r * mu[j, :j]
                mu[k, j] -= r
        if norms[k] >= (delta - mu[k, k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            U[[k, k - 1]] = U[[k - 1, k]]
            mu, norms = gso()
            k = max(k - 1, 1)
    Uobj = np.array(U, dtype=object)
    Anew = Uobj @ A.astype(object) @ Uobj.T
    return Anew.astype(np.int64), np.array(U, dtype=np.int64)


_CONGRUENCE_DIM_BOUND = 24


def find_signed_permutation(A, B) -> tuple[list[int], list[int]] | None:
    """A signed permutation witness (perm, signs) with A[i,j] = s_i s_j B[perm[i], perm[j]].

    Backtracking over vertex images with row-profile pruning; None if no
    witness exists.  Intended for the golden Gram comparisons (dim <= 24).
    """
    A = np.asarray(A)
    B = np.asarray(B)
    n = A.shape[0]
    if B.shape != A.shape:
        return None
    if n > _CONGRUENCE_DIM_BOUND:
        raise ValueError(
            f"dimension {n} exceeds the backtracking bound {_CONGRUENCE_DIM_BOUND}; "
            "compare invariants instead"
        )

    def profile(M, i):
        return tuple(sorted(abs(int(x)) for x in M[i]))

    profs_B: dict[int, tuple] = {j: profile(B, j) for j in range(n)}
    candidates = [
        [j for j in range(n) if profile(A, i) == profs_B[j]] for i in range(n)
    ]
    if any(not c for c in candidates):
        return None

    perm = [-1] * n
    signs = [0] * n
    used = [False] * n

    def backtrack(order_pos: int, order: list[int]) -> bool:
        if order_pos == len(order):
            return True
        i = order[order_pos]
        for j in candidates[i]:
            if used[j] or A[i, i] != B[j, j]:
                continue
            sign_options = (1,) if order_pos == 0 else (1, -1)
            for s in sign_options:
                ok = True
                for i2 in order[:order_pos]:
                    if A[i, i2] != s * signs[i2] * B[j, perm[i2]]:
                        ok = False
                        break
                if ok:
                    perm[i] = j
                    signs[i] = s
                    used[j] = True
                    if backtrack(order_pos + 1, order):
                        return True
                    used[j] = False
        perm[i] = -1
        signs[i] = 0
        return False

    # most-constrained-first ordering
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    if backtrack(0, order):
        return perm, signs
    return None


def congruent_up_to_signed_permutation(A, B) -> bool:
    """True iff S^T A S = B for some signed permutation matrix S."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        return False
    if determinant(A) != determinant(B):
        return False
    return find_signed_permutation(A, B) is not None
