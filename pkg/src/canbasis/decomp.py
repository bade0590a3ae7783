"""LDLT of Psi over Q(v), the bar-invariant split L = QP, and triangular solves."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotLaurentError, ZeroPivotError
from .flags import orbit_dim
from .laurent import IntLaurent, RatFunc, bar_split
from .typea import DimVector, KostantPartition, as_dimvec, enumerate_kp

__all__ = [
    "TriangularSystem",
    "pipeline_order",
    "ldlt",
    "qp_split",
    "solve_psi",
    "matmul",
    "transpose",
    "identity",
    "canonical_basis",
]

log = logging.getLogger(__name__)

Matrix = list[list]


def pipeline_order(v: Iterable[int]) -> list[KostantPartition]:
    """Kostant partitions sorted by orbit dimension, ties by descending multiplicity tuple."""
    kps = enumerate_kp(as_dimvec(v))
    keyed = [(orbit_dim(c), c) for c in kps]
    keyed.sort(key=lambda t: tuple(-m for m in t[1].mult))
    keyed.sort(key=lambda t: t[0])
    return [c for _, c in keyed]


def identity(n: int) -> list[list[IntLaurent]]:
    return [[IntLaurent.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Product of matrices whose entries support ``+`` and ``*`` (ints, IntLaurent, RatFunc)."""
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = x * y + acc
            out_row.append(acc if not isinstance(acc, int) else IntLaurent.const(acc))
        out.append(out_row)
    return out


def ldlt(psi: Sequence[Sequence[RatFunc]]) -> tuple[list[list[IntLaurent]], list[RatFunc]]:
    """``Psi = L D L^T`` with ``L`` lower unitriangular; no pivoting.

    ``L`` is returned with Laurent entries; a non-Laurent entry raises
    :class:`NotLaurentError` (it means the order or the monomials are wrong).
    """
    n = len(psi)
    lrat: list[list[RatFunc]] = [[RatFunc.zero()] * n for _ in range(n)]
    d: list[RatFunc] = []
    for c in range(n):
        for c2 in range(c):
            acc = RatFunc._coerce(psi[c][c2])
            for k in range(c2):
                if lrat[c][k] and lrat[c2][k]:
                    acc = acc - lrat[c][k] * lrat[c2][k] * d[k]
            lrat[c][c2] = acc / d[c2]
        acc = RatFunc._coerce(psi[c][c])
        for k in range(c):
            if lrat[c][k]:
                acc = acc - lrat[c][k] * lrat[c][k] * d[k]
        if acc.is_zero():
            raise ZeroPivotError(f"zero pivot at position {c}")
        d.append(acc)
        lrat[c][c] = RatFunc.one()
    lmat = []
    for c, row in enumerate(lrat):
        try:
            lmat.append([x.to_laurent() if k <= c else IntLaurent() for k, x in enumerate(row)])
        except NotLaurentError as exc:
            raise NotLaurentError(f"row {c} of L is not Laurent: {exc}") from exc
    return lmat, d


def qp_split(lmat: Sequence[Sequence[IntLaurent]]) -> tuple[list[list[IntLaurent]], list[list[IntLaurent]]]:
    """Factor ``L = Q P`` with ``Q`` bar-invariant and ``P`` strictly negative below the diagonal.

    Row by row; within a row, columns are swept right to left.  Row ``c'`` of
    ``P`` is supported in columns ``<= c'``, so subtracting a multiple of it
    never disturbs columns already processed.
    """
    n = len(lmat)
    q = identity(n)
    p: list[list[IntLaurent]] = []
    for c in range(n):
        work = list(lmat[c])
        for c2 in range(c - 1, -1, -1):
            split = bar_split(work[c2])
            if split.invariant_part:
                q[c][c2] = split.invariant_part
                for k in range(c2 + 1):
                    if p[c2][k]:
                        work[k] = work[k] - split.invariant_part * p[c2][k]
        p.append(work)
    return q, p


def solve_psi(lmat: Sequence[Sequence[IntLaurent]], d: Sequence[RatFunc],
              rhs: Sequence[RatFunc | IntLaurent]) -> list[RatFunc]:
    """Solve ``L D L^T x = rhs`` by forward substitution, scaling, back substitution."""
    n = len(lmat)
    y: list[RatFunc] = []
    for c in range(n):
        acc = RatFunc._coerce(rhs[c])
        for k in range(c):
            if lmat[c][k] and y[k]:
                acc = acc - y[k] * lmat[c][k]
        y.append(acc)
    z = []
    for c in range(n):
        if d[c].is_zero():
            raise ZeroPivotError(f"zero pivot at position {c}")
        z.append(y[c] / d[c])
    x: list[RatFunc] = [RatFunc.zero()] * n
    for c in range(n - 1, -1, -1):
        acc = z[c]
        for k in range(c + 1, n):
            if lmat[k][c] and x[k]:
                acc = acc - x[k] * lmat[k][c]
        x[c] = acc
    return x


@dataclass
class TriangularSystem:
    """All matrices of the canonical-basis computation for one dimension vector."""

    dimvec: DimVector
    order: list[KostantPartition]
    psi: list[list[RatFunc]]
    L: list[list[IntLaurent]]
    D: list[RatFunc]
    Q: list[list[IntLaurent]]
    P: list[list[IntLaurent]]

    @property
    def size(self) -> int:
        return len(self.order)

    def solve(self, rhs: Sequence[RatFunc | IntLaurent]) -> list[RatFunc]:
        return solve_psi(self.L, self.D, rhs)

    def check(self) -> list[str]:
        """Return a list of violated invariants (empty when all hold)."""
        problems = []
        n = self.size
        dmat = [[self.D[i] if i == j else RatFunc.zero() for j in range(n)] for i in range(n)]
        if matmul(matmul(self.L, dmat), transpose(self.L)) != [[RatFunc._coerce(x) for x in r] for r in self.psi]:
            problems.append("Psi != L D L^T")
        if matmul(self.Q, self.P) != self.L:
            problems.append("L != Q P")
        for i in range(n):
            for j in range(i):
                if self.Q[i][j] != self.Q[i][j].bar():
                    problems.append(f"Q[{i}][{j}] is not bar-invariant")
                if not self.P[i][j].is_strictly_negative():
                    problems.append(f"P[{i}][{j}] is not in v^-1 Z[v^-1]")
        return problems


def canonical_basis(v: Iterable[int], workers: int = 1, max_summands: int | None = None) -> TriangularSystem:
    """Compute Psi, then ``Psi = L D L^T`` and ``L = Q P``."""
    from .pairing import DEFAULT_MAX_SUMMANDS, PairingContext, psi_matrix

    dimvec = as_dimvec(v)
    ctx = PairingContext.build(dimvec, max_summands=max_summands or DEFAULT_MAX_SUMMANDS)
    psi = psi_matrix(ctx, workers=workers)
    lmat, d = ldlt(psi)
    q, p = qp_split(lmat)
    for i in range(len(p)):
        for j in range(i):
            if not p[i][j].has_nonnegative_coeffs() and p[i][j]:
                log.warning("P[%d][%d] = %s has a negative coefficient", i, j, p[i][j])
    return TriangularSystem(dimvec, ctx.ordered_kp, psi, lmat, d, q, p)
