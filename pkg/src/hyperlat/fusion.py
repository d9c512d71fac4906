"""Level-k alcove fusion matrices for SU(3) modules.

The fundamental datum of a module is the action of the (1,0) generator on
its vertices, given as a non-negative integer adjacency matrix.  All other
fusion matrices over the alcove follow from the SU(3) recursion on Dynkin
labels; walls (labels hitting -1) contribute zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class FusionError(ValueError):
    """A generator/level pair that does not define a valid fusion table."""


@dataclass(frozen=True)
class Weight:
    """SU(3) weight in Dynkin labels, either unshifted (p,q) or rho-shifted {p,q}."""

    p: int
    q: int
    shifted: bool = False

    def shift(self) -> "Weight":
        if self.shifted:
            raise ValueError("weight is already shifted")
        return Weight(self.p + 1, self.q + 1, shifted=True)

    def unshift(self) -> "Weight":
        if not self.shifted:
            raise ValueError("weight is not shifted")
        return Weight(self.p - 1, self.q - 1, shifted=False)

    @property
    def triality(self) -> int:
        # shifted labels {p,q} describe the unshifted weight (p-1,q-1),
        # which has the same p-q difference
        return (self.p - self.q) % 3


def triality(p: int, q: int) -> int:
    """Z3 grading of the unshifted weight (p,q)."""
    return (p - q) % 3


def alcove(k: int) -> list[tuple[int, int]]:
    """Unshifted weights (p,q) with p,q >= 0, p+q <= k, in (p+q, p) order.

    This order is the canonical vertex order of the built-in A_k modules.
    """
    if k < 0:
        raise ValueError(f"level must be non-negative, got {k}")
    return [(p, q) for n in range(k + 1) for p in range(n + 1) for q in [n - p]]


def fundamental_action(w: tuple[int, int], k: int) -> list[tuple[int, int]]:
    """Weights of the alcove appearing in (1,0) x (p,q) at level k."""
    p, q = w
    if p < 0 or q < 0 or p + q > k:
        raise ValueError(f"weight {w} outside the level-{k} alcove")
    candidates = [(p + 1, q), (p - 1, q + 1), (p, q - 1)]
    return [(a, b) for a, b in candidates if a >= 0 and b >= 0 and a + b <= k]


def builtin_A_generator(k: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Adjacency matrix and vertex trialities of the A_k(SU(3)) module.

    Vertices are the alcove weights in `alcove(k)` order; entry (w, w') is 1
    iff w' appears in (1,0) x w.
    """
    verts = alcove(k)
    index = {w: i for i, w in enumerate(verts)}
    r = len(verts)
    adj = np.zeros((r, r), dtype=np.int64)
    for w in verts:
        for w2 in fundamental_action(w, k):
            adj[index[w], index[w2]] = 1
    trialities = tuple(triality(p, q) for p, q in verts)
    return adj, trialities


class FusionTable:
    """The family F_{(p,q)} of r x r integer matrices over the level-k alcove."""

    def __init__(self, level: int, entries: dict[tuple[int, int], np.ndarray]):
        self.level = level
        self.rank = entries[(0, 0)].shape[0]
        self.entries = entries

    def __getitem__(self, pq: tuple[int, int]) -> np.ndarray:
        return self.entries[pq]

    def __contains__(self, pq: tuple[int, int]) -> bool:
        return pq in self.entries


def build_alcove_fusion(generator: np.ndarray, k: int) -> FusionTable:
    """Compute all F_{(p,q)}, p+q <= k, from the fundamental matrix.

    Induction on the total degree n = p+q: every right-hand term of the
    recursion has strictly smaller degree.  Terms whose label has p = -1 or
    q = -1 sit on a shifted-label wall and vanish.
    """
    gen = np.asarray(generator, dtype=np.int64)
    if gen.ndim != 2 or gen.shape[0] != gen.shape[1]:
        raise FusionError("generator must be a square matrix")
    if (gen < 0).any():
        raise FusionError("generator must be non-negative")
    r = gen.shape[0]
    F: dict[tuple[int, int], np.ndarray] = {(0, 0): np.eye(r, dtype=np.int64)}
    if k >= 1:
        F[(1, 0)] = gen.copy()
        F[(0, 1)] = gen.T.copy()

    def term(p: int, q: int) -> np.ndarray:
        if p == -1 or q == -1:
            return np.zeros((r, r), dtype=np.int64)
        return F[(p, q)]

    for n in range(2, k + 1):
        for q in range(n + 1):
            p = n - q
            if q == 0:
                F[(p, 0)] = F[(1, 0)] @ F[(p - 1, 0)] - term(p - 2, 1)
            elif p == 0:
                F[(0, q)] = F[(q, 0)].T.copy()
            else:
                F[(p, q)] = (
                    F[(1, 0)] @ F[(p - 1, q)] - term(p - 1, q - 1) - term(p - 2, q + 1)
                )
    for pq, mat in F.items():
        if (mat < 0).any():
            raise FusionError(
                f"fusion matrix F_{pq} has a negative entry; "
                f"generator is not a valid level-{k} module datum"
            )
    return FusionTable(k, F)
