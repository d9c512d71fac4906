"""The set of higher roots of a module, their inner products and bases.

A restricted higher root is an admissible pair (weight position, module
vertex): the position lives in the N x N period parallelogram in shifted
labels and the pair satisfies the Z3 admissibility constraint
(position triality + vertex triality = 0 mod 3).  Inner products come from
the six-term signed combination of extended fusion matrices; every higher
root has squared norm 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .catalog import QuantumModule
from .folding import ExtendedFusion
from .fusion import build_alcove_fusion
from .lattice import exact_rank, modular_level, rational_inverse

#: shifted-label positions of the three bases of section "choice of a basis";
#: B3 positions depend on the altitude N (callable)
BASIS_POSITIONS = {
    "B1": lambda N: [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (0, 2)],
    "B2": lambda N: [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)],
    "B3": lambda N: [
        (0, 0),
        (1, 0),
        (0, 1),
        (N - 1, N - 2),
        (N - 2, N - 1),
        (N - 1, N - 1),
    ],
}


@dataclass(frozen=True, order=True)
class RibbonPoint:
    """Admissible (shifted weight position, vertex index) pair."""

    pos: tuple[int, int]
    vertex: int


def position_triality(p: int, q: int) -> int:
    # shifted {p,q} labels the unshifted weight (p-1, q-1)
    return (p - q) % 3


class RootSystem:
    """Higher-root machinery for one validated module.

    Builds the alcove fusion table once; inner products are served from a
    cache of the six-term combination matrices, keyed by the label
    difference modulo the 3N period.
    """

    def __init__(self, module: QuantumModule):
        self.module = module
        self.N = module.altitude
        self.rank = module.rank
        self.table = build_alcove_fusion(module.adjacency, module.level)
        self.extended = ExtendedFusion(self.table)
        self._pair_cache: dict[tuple[int, int], np.ndarray] = {}

    # -- the ribbon ---------------------------------------------------------

    def admissible(self, pos: tuple[int, int], vertex: int) -> bool:
        p, q = pos
        return (position_triality(p, q) + self.module.trialities[vertex]) % 3 == 0

    def ribbon(self) -> list[RibbonPoint]:
        """All admissible pairs over the period parallelogram, lex ordered."""
        N = self.N
        points = [
            RibbonPoint((p, q), a)
            for p in range(N)
            for q in range(N)
            for a in range(self.rank)
            if self.admissible((p, q), a)
        ]
        expected = self.rank * N * N // 3
        if len(points) != expected:
            raise ValueError(
                f"ribbon has {len(points)} points, expected {expected}; "
                "module grading is not a free Z3 action"
            )
        return points

    # -- inner products -----------------------------------------------------

    def pair_matrix(self, lam1: int, lam2: int) -> np.ndarray:
        """Matrix of inner products at label difference (lam1, lam2)."""
        key = (lam1 % (3 * self.N), lam2 % (3 * self.N))
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        F = self.extended.matrix
        l1, l2 = key
        mat = (
            F(l1 + 1, l2 + 1)
            + F(l1 - 2, l2 + 1)
            + F(l1 + 1, l2 - 2)
            - F(l1 - 1, l2 - 1)
            - F(l1 - 1, l2 + 2)
            - F(l1 + 2, l2 - 1)
        )
        mat.setflags(write=False)
        self._pair_cache[key] = mat
        return mat

    def inner(self, alpha: RibbonPoint, beta: RibbonPoint) -> int:
        (m1, m2), a = alpha.pos, alpha.vertex
        (n1, n2), b = beta.pos, beta.vertex
        return int(self.pair_matrix(m1 - n1, m2 - n2)[a, b])

    # -- bases and Gram matrices -------------------------------------------

    def basis(self, which: str = "B1") -> list[RibbonPoint]:
        """The 2r basis roots over the fixed position list, in (position, vertex) order."""
        if self.module.level == 0:
            # the k=0 ribbon has 3 points; any two of them form a basis
            return self.ribbon()[:2]
        positions = BASIS_POSITIONS[which](self.N)
        basis = [
            RibbonPoint(pos, a)
            for pos in positions
            for a in range(self.rank)
            if self.admissible(pos, a)
        ]
        if len(basis) != 2 * self.rank:
            raise ValueError(
                f"basis {which} has {len(basis)} elements, expected {2 * self.rank}"
            )
        return basis

    def gram(self, basis: list[RibbonPoint] | None = None) -> np.ndarray:
        """Integer Gram matrix of the given family (default: basis B1)."""
        if basis is None:
            basis = self.basis("B1")
        n = len(basis)
        G = np.zeros((n, n), dtype=np.int64)
        for i, alpha in enumerate(basis):
            for j, beta in enumerate(basis):
                G[i, j] = self.inner(alpha, beta)
        if (G != G.T).any():
            raise ValueError("inner product failed to be symmetric")
        return G

    def big_gram(self) -> tuple[np.ndarray, int]:
        """All pairwise inner products over the ribbon, with its exact rank."""
        points = self.ribbon()
        n = len(points)
        G = np.zeros((n, n), dtype=np.int64)
        for i, alpha in enumerate(points):
            for j, beta in enumerate(points):
                G[i, j] = self.inner(alpha, beta)
        return G, exact_rank(G)

    # -- expansion on a basis ----------------------------------------------

    def expansions(self, basis: list[RibbonPoint] | None = None) -> np.ndarray:
        """Integer coordinates of every ribbon point on the basis.

        Row i solves gram @ c = t_i with t_i the inner products of root i
        against the basis; integrality is exact (computed via l * A^-1 with
        l the modular level) and enforced.
        """
        if basis is None:
            basis = self.basis("B1")
        A = self.gram(basis)
        level = modular_level(A)
        K = rational_inverse(A)
        L = np.array(
            [[int(Fraction(level) * x) for x in row] for row in K], dtype=np.int64
        )
        points = self.ribbon()
        T = np.zeros((len(points), len(basis)), dtype=np.int64)
        for i, alpha in enumerate(points):
            for j, beta in enumerate(basis):
                T[i, j] = self.inner(alpha, beta)
        scaled = T @ L.T
        if (scaled % level).any():
            raise ValueError("higher-root expansion has a non-integral coordinate")
        coords = scaled // level
        norms = np.einsum("ij,jk,ik->i", coords, A, coords)
        if (norms != 6).any():
            raise ValueError("expanded higher root does not have Gram norm 6")
        return coords

    # -- harmonicity --------------------------------------------------------

    def harmonicity_check(self, alpha: RibbonPoint) -> bool:
        """Mean-value property of f = <alpha, .> over one full 3N x 3N period.

        At every (position, vertex) the sum over predecessors in the weight
        lattice equals the sum over predecessors in the module graph.
        """
        adj = self.module.adjacency
        (m1, m2) = alpha.pos
        a = alpha.vertex

        def f(n1: int, n2: int, b: int) -> int:
            return int(self.pair_matrix(m1 - n1, m2 - n2)[a, b])

        period = 3 * self.N
        for p in range(period):
            for q in range(period):
                for b in range(self.rank):
                    lattice_side = (
                        f(p - 1, q, b) + f(p, q + 1, b) + f(p + 1, q - 1, b)
                    )
                    module_side = sum(
                        int(adj[b2, b]) * f(p, q, b2)
                        for b2 in range(self.rank)
                        if adj[b2, b]
                    )
                    if lattice_side != module_side:
                        return False
        return True
