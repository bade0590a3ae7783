"""Affine Hecke algebra of GL_n at the central character of ``s = s_{e,v}``.

``s`` is block diagonal with consecutive blocks of sizes ``v_1, ..., v_m``
(eigenvalues ``e, e q0, e q0^2, ...``).  Its fixed nilpotent locus is the
block-subdiagonal part of ``gl_n``, identified with ``R_v`` of the A_m quiver.
``q0`` is assumed not to be a root of unity and never enters the computation.

Outputs:

* composition multiplicities ``[M_c : L_c'] = p_{c',c}(1)``;
* the vector ``H`` of renormalised graded Homs against the Springer sheaf;
* ``F = Q^T Psi^{-1} H`` and the simple dimensions ``dim L_c = f_c(1)``.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .decomp import TriangularSystem, canonical_basis, matmul, transpose
from .errors import NotLaurentError, ResourceLimitError
from .flags import ZeroPattern, inversion_counts, inversions, permutation_array
from .laurent import IntLaurent, RatFunc
from .pairing import DEFAULT_MAX_SUMMANDS, PairingContext, counts_to_laurent, graded_hom_dim
from .typea import DimVector, as_dimvec

__all__ = [
    "HeckeContext",
    "GlnPattern",
    "HeckeResult",
    "embed_pattern",
    "wn_pattern",
    "intersection_table",
    "s_n_sum",
    "s_n_sum_naive",
    "h_vector",
    "f_vector",
    "simple_dims",
    "standard_multiplicities",
    "hecke_dimensions",
    "parse_cycles",
]

log = logging.getLogger(__name__)

Position = tuple[int, int]


@dataclass(frozen=True)
class HeckeContext:
    """Block layout of ``s_{e,v}`` inside ``gl_n`` (0-based global indices)."""

    dimvec: DimVector
    block_ranges: tuple[range, ...]
    subdiagonal_positions: tuple[Position, ...]

    @classmethod
    def build(cls, dimvec: Iterable[int]) -> HeckeContext:
        dimvec = as_dimvec(dimvec)
        offsets = [0, *itertools.accumulate(dimvec)]
        blocks = tuple(range(offsets[j], offsets[j + 1]) for j in range(len(dimvec)))
        positions = tuple(
            (r, c)
            for j in range(len(dimvec) - 1)
            for r in blocks[j + 1]
            for c in blocks[j]
        )
        return cls(dimvec, blocks, positions)

    @property
    def n(self) -> int:
        return sum(self.dimvec)


@dataclass(frozen=True)
class GlnPattern:
    """A coordinate subspace of the fixed nilpotent locus, as a set of positions."""

    positions: frozenset[Position]

    @property
    def dim(self) -> int:
        return len(self.positions)

    def __and__(self, other: GlnPattern) -> GlnPattern:
        return GlnPattern(self.positions & other.positions)

    def to_zero_pattern(self, ctx: HeckeContext) -> ZeroPattern:
        masks = []
        for j in range(len(ctx.dimvec) - 1):
            rows, cols = ctx.block_ranges[j + 1], ctx.block_ranges[j]
            masks.append(np.array([[(r, c) in self.positions for c in cols] for r in rows], dtype=bool)
                         .reshape(len(rows), len(cols)))
        return ZeroPattern(ctx.dimvec, masks)


def embed_pattern(p: ZeroPattern, ctx: HeckeContext) -> GlnPattern:
    if p.dimvec != ctx.dimvec:
        raise ValueError("pattern and Hecke context have different dimension vectors")
    out = set()
    for j, r, c in p.positions():
        out.add((ctx.block_ranges[j + 1][r], ctx.block_ranges[j][c]))
    return GlnPattern(frozenset(out))


def _inverse(w: Sequence[int]) -> list[int]:
    inv = [0] * len(w)
    for k, wk in enumerate(w):
        inv[wk] = k
    return inv


def wn_pattern(w: Sequence[int], ctx: HeckeContext) -> GlnPattern:
    """Subdiagonal positions inside ``w n w^-1``, ``n`` strictly lower triangular.

    ``w`` is a 0-based one-line permutation of ``range(n)``.
    """
    winv = _inverse(w)
    return GlnPattern(frozenset((r, c) for r, c in ctx.subdiagonal_positions if winv[r] > winv[c]))


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Cycle notation with 1-based points (``"(132)"``, ``"(12)(34)"``, ``"e"``) to one-line form."""
    w = list(range(n))
    text = text.strip()
    if text in ("e", "id", ""):
        return tuple(w)
    for cyc in text.replace(" ", "").strip("()").split(")("):
        pts = [int(ch) - 1 for ch in cyc] if "," not in cyc else [int(x) - 1 for x in cyc.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            w[a] = b
    return tuple(w)


def intersection_table(ctx: HeckeContext) -> list[tuple[tuple[int, ...], int, GlnPattern]]:
    """``(w, l(w), R_v cap w n)`` for every ``w in S_n``."""
    return [(w, inversions(w), wn_pattern(w, ctx)) for w in itertools.permutations(range(ctx.n))]


def s_n_sum_naive(pattern: GlnPattern, ctx: HeckeContext) -> Counter:
    """Distribution of ``l(w) + dim(R cap w n)`` by streaming over ``S_n``."""
    acc: Counter = Counter()
    for w in itertools.permutations(range(ctx.n)):
        acc[inversions(w) + (pattern & wn_pattern(w, ctx)).dim] += 1
    return acc


class _SnTables:
    def __init__(self, n: int, max_summands: int):
        if math.factorial(n) > max_summands:
            raise ResourceLimitError(f"|S_{n}| = {math.factorial(n)} exceeds the limit of {max_summands} summands")
        # rows are inverses u = w^-1; l(u) = l(w) and u ranges over all of S_n
        self.u = permutation_array(n)
        self.inv = inversion_counts(self.u).astype(np.int64)


def s_n_sum(pattern: GlnPattern, ctx: HeckeContext, tables: _SnTables | None = None) -> Counter:
    """Vectorised :func:`s_n_sum_naive`."""
    tables = tables or _SnTables(ctx.n, DEFAULT_MAX_SUMMANDS)
    stat = tables.inv.copy()
    for r, c in pattern.positions:
        stat += tables.u[:, r] > tables.u[:, c]
    values, counts = np.unique(stat, return_counts=True)
    return Counter({int(s): int(k) for s, k in zip(values, counts)})


def h_vector(hctx: HeckeContext, pctx: PairingContext,
             max_summands: int = DEFAULT_MAX_SUMMANDS) -> list[RatFunc]:
    """``h_c = v^(-dim R_c) (1 - v^-2)^(-n) / [a_c]! * sum_{w in S_n} v^(2 (l(w) + dim R_c cap w n))``."""
    tables = _SnTables(hctx.n, max_summands)
    out = []
    for c in range(pctx.size):
        gp = embed_pattern(pctx.patterns[c], hctx)
        counts = s_n_sum(gp, hctx, tables)
        out.append(graded_hom_dim(counts_to_laurent(counts), pctx.dims_R[c], 0,
                                  hctx.dimvec, pctx.parabolic[c][1], IntLaurent.const(1)))
    return out


def f_vector(sys: TriangularSystem, h: Sequence[RatFunc]) -> list[IntLaurent]:
    """``F = Q^T Psi^{-1} H``; every entry must be Laurent."""
    x = sys.solve(h)
    qt = transpose(sys.Q)
    out = []
    for c, row in enumerate(qt):
        acc = RatFunc.zero()
        for q, xk in zip(row, x):
            if q:
                acc = acc + xk * q
        try:
            out.append(acc.to_laurent())
        except NotLaurentError as exc:
            raise NotLaurentError(f"F[{c}] = {acc} is not Laurent; Psi, Q and H are inconsistent") from exc
    return out


def simple_dims(f: Sequence[IntLaurent]) -> list[int]:
    return [x.eval_at_one() for x in f]


def standard_multiplicities(sys: TriangularSystem) -> list[list[int]]:
    """``[M_c : L_c'] = p_{c',c}(1)``; row ``c`` is the standard module ``M_c``."""
    n = sys.size
    return [[sys.P[c2][c].eval_at_one() for c2 in range(n)] for c in range(n)]


@dataclass
class HeckeResult:
    system: TriangularSystem
    context: HeckeContext
    H: list[RatFunc]
    F: list[IntLaurent]
    dims: list[int]
    multiplicities: list[list[int]]

    def check(self) -> list[str]:
        problems = []
        qinv_t = _unitriangular_inverse_transpose(self.system.Q)
        g = matmul(qinv_t, [[x] for x in self.F])
        lhs = matmul(self.system.psi, g)
        if [row[0] for row in lhs] != [RatFunc._coerce(x) for x in self.H]:
            problems.append("Psi Q^-T F != H")
        for c, f in enumerate(self.F):
            if f and not f.has_nonnegative_coeffs():
                problems.append(f"F[{c}] = {f} has a negative coefficient")
        return problems


def _unitriangular_inverse_transpose(q: Sequence[Sequence[IntLaurent]]) -> list[list[IntLaurent]]:
    n = len(q)
    inv = [[IntLaurent.const(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            acc = IntLaurent()
            for k in range(j, i):
                if q[i][k] and inv[k][j]:
                    acc = acc + q[i][k] * inv[k][j]
            inv[i][j] = -acc
    return transpose(inv)


def hecke_dimensions(v: Iterable[int], workers: int = 1,
                     max_summands: int = DEFAULT_MAX_SUMMANDS) -> HeckeResult:
    dimvec = as_dimvec(v)
    sys = canonical_basis(dimvec, workers=workers, max_summands=max_summands)
    pctx = PairingContext.build(dimvec, sys.order, max_summands=max_summands)
    hctx = HeckeContext.build(dimvec)
    h = h_vector(hctx, pctx, max_summands)
    f = f_vector(sys, h)
    result = HeckeResult(sys, hctx, h, f, simple_dims(f), standard_multiplicities(sys))
    for c, fc in enumerate(f):
        if fc and not fc.has_nonnegative_coeffs():
            log.error("F[%d] = %s has a negative coefficient", c, fc)
    return result
