"""Signed affine-Weyl folding and the periodic extended fusion matrices.

In rho-shifted labels {p,q} the reflection walls sit at p = 0, q = 0 and
p + q = 0 mod N, with N = k + 3.  Folding an arbitrary integer pair back
into the closed alcove (1 <= p, 1 <= q, p+q <= N-1) with a sign per
reflection extends the alcove fusion table to the whole weight lattice;
the resulting family is periodic of period 3N in each label.
"""

from __future__ import annotations

import numpy as np

from .fusion import FusionTable

_FOLD_MAX_ITER = 10_000


def fold(p: int, q: int, N: int) -> tuple[int, tuple[int, int] | None]:
    """Reduce the shifted pair (p,q) into the closed alcove.

    Returns (sign, (p0, q0)) with sign in {-1, +1}, or (0, None) when the
    point lies on a reflection wall.  The result is independent of the
    order in which the three reflections are applied.
    """
    if N < 3:
        raise ValueError(f"altitude must be >= 3, got {N}")
    # pre-reduce by the 3N translation periods to bound the walk
    p %= 3 * N
    q %= 3 * N
    sign = 1
    for _ in range(_FOLD_MAX_ITER):
        if p % N == 0 or q % N == 0 or (p + q) % N == 0:
            return 0, None
        if p < 0:
            p, q = -p, p + q
        elif q < 0:
            p, q = p + q, -q
        elif p + q > N:
            p, q = N - q, N - p
        else:
            return sign, (p, q)
        sign = -sign
    raise RuntimeError("folding did not terminate")  # pragma: no cover


class ExtendedFusion:
    """Evaluation of the extended matrices F^hat_{p,q} at any integer pair.

    Lookups are memoized over one fundamental 3N x 3N period; warm-up is
    lazy and the memo is only ever appended to, so concurrent readers after
    a single-threaded warm-up pass are safe.
    """

    def __init__(self, table: FusionTable):
        self.table = table
        self.N = table.level + 3
        self.rank = table.rank
        self._zero = np.zeros((self.rank, self.rank), dtype=np.int64)
        self._zero.setflags(write=False)
        self._memo: dict[tuple[int, int], np.ndarray] = {}

    def matrix(self, p: int, q: int) -> np.ndarray:
        """F^hat_{p,q} in shifted labels (a read-only r x r matrix)."""
        key = (p % (3 * self.N), q % (3 * self.N))
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        sign, target = fold(key[0], key[1], self.N)
        if sign == 0:
            mat = self._zero
        else:
            p0, q0 = target
            mat = sign * self.table[(p0 - 1, q0 - 1)]
            mat.setflags(write=False)
        self._memo[key] = mat
        return mat

    def twist_P(self) -> np.ndarray:
        """The Z3 generator P = F^hat_{N-2,1}; validated as a cube root of one."""
        P = self.matrix(self.N - 2, 1)
        is_perm = (
            ((P == 0) | (P == 1)).all()
            and (P.sum(axis=0) == 1).all()
            and (P.sum(axis=1) == 1).all()
        )
        if not is_perm:
            raise ValueError("P is not a permutation matrix")
        if not np.array_equal(P @ P @ P, np.eye(self.rank, dtype=np.int64)):
            raise ValueError("P does not cube to the identity")
        return P
