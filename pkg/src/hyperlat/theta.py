"""Exact theta-series coefficients by pruned short-vector enumeration.

The enumerator walks a depth-first tree on the Cholesky factorisation of
the Gram matrix (floating point, bounds widened by a fixed margin) and
re-verifies every candidate's norm in exact integer arithmetic before it
is counted.  Counting is parallelised by partitioning the range of the
last coordinate; per-shard counters merge by summation, so the output is
independent of the thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from .lattice import is_positive_definite, lll_reduce_gram

_EPS = 1e-6


@dataclass(frozen=True)
class ThetaSeries:
    """Coefficients c_m = #{x : x^T A x = 2m}, m = 0..max_index."""

    coefficients: tuple[int, ...]

    @property
    def max_index(self) -> int:
        return len(self.coefficients) - 1

    def kissing(self) -> tuple[int, int]:
        """(norm, count) of the first non-empty shell above zero."""
        for m, c in enumerate(self.coefficients):
            if m > 0 and c:
                return 2 * m, c
        raise ValueError("no non-zero shell within the computed range")


@njit(cache=True, nogil=True)
def _enumerate(A, u, d, bound, top_lo, top_hi, max_norm, counts, out, collect):
    """DFS over x_{n-1} in [top_lo, top_hi]; counts[m] += #{x : norm = 2m}.

    Only one representative of each +-x pair is visited (the last
    non-zero coordinate is kept non-negative) and contributes 2 to its
    shell count, so callers shard the top coordinate over [0, top].
    When collect is true, both x and -x are appended to `out` instead;
    returns the number of vectors written.

    Per-node work is O(1) amortised: the centre of each subinterval and
    the exact integer norm are maintained through lazily refreshed tail
    sums (sig/sigA columns, staleness tracked in `r`), so the float
    pruning bound never decides a count -- every leaf's norm arrives as
    an exactly maintained integer in rhoz.
    """
    n = d.shape[0]
    x = np.zeros(n, dtype=np.int64)
    center = np.zeros(n)
    rho = np.zeros(n + 1)
    rhoz = np.zeros(n + 1, dtype=np.int64)
    ub = np.zeros(n, dtype=np.int64)
    # sig[j, k]  = sum_{l >= j} u[k, l] * x[l]   (float, for centres)
    # siga[j, k] = sum_{l >= j} A[k, l] * x[l]   (exact, for norms)
    sig = np.zeros((n + 1, n))
    siga = np.zeros((n + 1, n), dtype=np.int64)
    # r[k]: deepest index whose x changed since column k was refreshed
    r = np.full(n, n - 1, dtype=np.int64)
    # zf[k]: x[l] = 0 for every l > k
    zf = np.zeros(n, dtype=np.bool_)
    zf[n - 1] = True
    written = 0

    i = n - 1
    t = math.sqrt(max(bound, 0.0) / d[i])
    lo = max(int(math.ceil(-t - _EPS)), top_lo, 0)
    ub[i] = min(int(math.floor(t + _EPS)), top_hi)
    x[i] = lo - 1
    center[i] = 0.0

    while True:
        x[i] += 1
        if x[i] > ub[i]:
            i += 1
            if i >= n:
                break
            continue
        y = x[i] + center[i]
        rho[i] = rho[i + 1] + d[i] * y * y
        if rho[i] > bound + _EPS:
            if y > 0.0:
                # past the centre the contribution grows monotonically
                i += 1
                if i >= n:
                    break
            continue
        rhoz[i] = rhoz[i + 1] + x[i] * (A[i, i] * x[i] + 2 * siga[i + 1, i])
        if i == 0:
            norm = rhoz[0]
            if 0 < norm <= max_norm and norm % 2 == 0:
                if collect:
                    for a in range(n):
                        out[written, a] = x[a]
                        out[written + 1, a] = -x[a]
                    written += 2
                else:
                    counts[norm // 2] += 2
            continue
        k = i - 1
        if r[k] < r[i]:
            r[k] = r[i]
        r[i] = i
        for j in range(r[k], k, -1):
            sig[j, k] = sig[j + 1, k] + u[k, j] * x[j]
            siga[j, k] = siga[j + 1, k] + A[k, j] * x[j]
        # r[k] keeps its inherited value: levels below k have not yet
        # seen those changes; it resets only when k hands off in turn
        cc = sig[k + 1, k]
        center[k] = cc
        zf[k] = zf[i] and x[i] == 0
        i = k
        t = math.sqrt(max(bound - rho[i + 1], 0.0) / d[i])
        lo = int(math.ceil(-cc - t - _EPS))
        if zf[i] and lo < 0:
            # all deeper coordinates vanish: keep the representative of
            # the +-x pair whose last non-zero coordinate is positive
            lo = 0
        x[i] = lo - 1
        ub[i] = int(math.floor(-cc + t + _EPS))
    return written


def _cholesky_data(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    L = np.linalg.cholesky(np.asarray(A, dtype=np.float64))
    R = L.T
    d = np.diag(R) ** 2
    u = R / np.diag(R)[:, None]
    return u, d


def _check_gram(A) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or (A != A.T).any():
        raise ValueError("Gram matrix must be square and symmetric")
    if not is_positive_definite(A):
        raise ValueError("Gram matrix is not positive definite")
    return A


def theta_coefficients(A, max_index: int, threads: int = 1) -> ThetaSeries:
    """Exact counts of lattice vectors of norm 2m for m <= max_index."""
    A = _check_gram(A)
    if max_index < 0:
        raise ValueError("max index must be non-negative")
    if max_index == 0 or A.shape[0] == 0:
        return ThetaSeries((1,) + (0,) * max_index)
    A, _ = lll_reduce_gram(A)  # same vector counts, far smaller search tree
    u, d = _cholesky_data(A)
    bound = 2.0 * max_index + 0.25
    n = A.shape[0]
    top = int(math.floor(math.sqrt(bound / d[n - 1]) + _EPS))
    dummy = np.empty((0, n), dtype=np.int64)

    def run(lo: int, hi: int) -> np.ndarray:
        counts = np.zeros(max_index + 1, dtype=np.int64)
        _enumerate(A, u, d, bound, lo, hi, 2 * max_index, counts, dummy, False)
        return counts

    threads = max(1, threads)
    if threads == 1:
        total = run(0, top)
    else:
        # one task per non-negative top-coordinate value (the enumerator
        # counts +-x pairs); deterministic merge by summation
        with ThreadPoolExecutor(max_workers=threads) as pool:
            shards = pool.map(lambda v: run(v, v), range(top + 1))
            total = sum(shards, np.zeros(max_index + 1, dtype=np.int64))
    total[0] += 1  # the zero vector
    return ThetaSeries(tuple(int(c) for c in total))


def shell_vectors(A, max_index: int) -> dict[int, np.ndarray]:
    """All lattice vectors x (both signs) with 0 < x^T A x <= 2*max_index, keyed by norm."""
    A = _check_gram(A)
    series = theta_coefficients(A, max_index)
    total = sum(series.coefficients[1:])
    n = A.shape[0]
    out = np.zeros((total, n), dtype=np.int64)
    Ared, U = lll_reduce_gram(A)
    u, d = _cholesky_data(Ared)
    bound = 2.0 * max_index + 0.25
    counts = np.zeros(max_index + 1, dtype=np.int64)
    top = int(math.floor(math.sqrt(bound / d[n - 1]) + _EPS))
    written = _enumerate(
        Ared, u, d, bound, 0, top, 2 * max_index, counts, out, True
    )
    if written != total:
        raise RuntimeError("vector collection disagrees with the counting pass")
    out = out @ U  # back to coordinates on the original basis
    norms = np.einsum("ij,jk,ik->i", out, A, out)
    shells: dict[int, np.ndarray] = {}
    for norm in sorted(set(int(v) for v in norms)):
        shells[norm] = out[norms == norm]
    return shells


def kissing_term(A) -> tuple[int, int]:
    """(norm, count) of the first shell; search range doubles until found."""
    A = _check_gram(A)
    max_index = max(1, int(np.diag(A).min()) // 2)
    while True:
        series = theta_coefficients(A, max_index)
        try:
            return series.kissing()
        except ValueError:
            max_index *= 2


@dataclass(frozen=True)
class ShellReport:
    norm: int
    count: int
    roots_in_shell: int


def roots_are_shell(A, root_coords: np.ndarray, max_norm: int = 6) -> list[ShellReport]:
    """Per-shell comparison of lattice vectors against +-(higher roots).

    `root_coords` holds the basis expansions of the restricted higher
    roots; the +- closure is compared, as a set, with each shell of norm
    <= max_norm.
    """
    shells = shell_vectors(A, max_norm // 2)
    roots = {tuple(int(c) for c in row) for row in root_coords}
    roots |= {tuple(-c for c in row) for row in roots}
    report = []
    for norm, vectors in sorted(shells.items()):
        members = {tuple(int(c) for c in row) for row in vectors}
        report.append(
            ShellReport(norm=norm, count=len(members), roots_in_shell=len(members & roots))
        )
    return report


# -- series cross-checks for the first A-module ----------------------------


def _series_mul(a: list[int], b: list[int], trunc: int) -> list[int]:
    out = [0] * trunc
    for i, ai in enumerate(a):
        if ai == 0 or i >= trunc:
            continue
        for j, bj in enumerate(b):
            if i + j >= trunc:
                break
            out[i + j] += ai * bj
    return out


def _series_pow(base: list[int], exponent: int, trunc: int) -> list[int]:
    result = [1] + [0] * (trunc - 1)
    for _ in range(exponent):
        result = _series_mul(result, base, trunc)
    return result


def jacobi_theta_combination(max_index: int) -> tuple[int, ...]:
    """Coefficients of q^(2m) in (theta2(0,q^4)^6 + theta3^6 + theta4^6)/2.

    Integer power-series arithmetic on theta2(0,q^4) = sum q^((2n+1)^2),
    theta3(0,q^4) = sum q^(4 n^2), theta4 with alternating signs.
    """
    trunc = 2 * max_index + 1
    th2 = [0] * trunc
    th3 = [0] * trunc
    th4 = [0] * trunc
    n = 0
    while True:
        e = 4 * n * n
        if e >= trunc and (2 * n + 1) ** 2 >= trunc:
            break
        if e < trunc:
            w = 1 if n == 0 else 2
            th3[e] += w
            th4[e] += w * (-1) ** n
        eo = (2 * n + 1) ** 2
        if eo < trunc:
            th2[eo] += 2
        n += 1
    total = [
        a + b + c
        for a, b, c in zip(
            _series_pow(th2, 6, trunc),
            _series_pow(th3, 6, trunc),
            _series_pow(th4, 6, trunc),
        )
    ]
    assert all(x % 2 == 0 for x in total[0::2])
    return tuple(total[2 * m] // 2 for m in range(max_index + 1))
