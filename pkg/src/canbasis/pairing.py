"""The standard bilinear form on monomials, via graded Hom dimensions.

For shapes ``(i, a)`` and ``(i', a')`` of weight ``v``::

    (E_{i,a}, E_{i',a'}) = v^(-dim R - dim R') * prod_i (1 - v^-2)^(-v_i) / ([a]! [a']!)
                           * sum_{w in S_v} v^(2 (l(w) + dim R cap wR'))

The Weyl sum is the expensive part.  :func:`weyl_sum` evaluates it as a
transfer-matrix contraction along the quiver (``S_v`` is a product over
vertices and the statistic splits over arrows); :func:`weyl_sum_naive`
streams over ``S_v`` element by element and is kept as the reference path.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ResourceLimitError
from .flags import (
    WeylElement,
    ZeroPattern,
    conjugate_pattern,
    enumerate_weyl,
    intersection_dim,
    inversion_counts,
    parabolic_data,
    permutation_array,
    shape_pattern,
    weyl_size,
)
from .laurent import IntLaurent, RatFunc
from .typea import DimVector, KostantPartition, MonomialShape, as_dimvec, reineke_exponents

__all__ = [
    "DEFAULT_MAX_SUMMANDS",
    "PairingContext",
    "weyl_sum",
    "weyl_sum_naive",
    "weyl_fold",
    "counts_to_laurent",
    "generic_denominator",
    "graded_hom_dim",
    "psi_entry",
    "psi_matrix",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_SUMMANDS = 10 ** 7

_ONE_MINUS_V2 = IntLaurent({0: 1, -2: -1})


def counts_to_laurent(counts: dict[int, int] | Counter) -> IntLaurent:
    """``sum_s counts[s] * v^(2 s)``."""
    return IntLaurent({2 * s: c for s, c in counts.items()})


def weyl_fold(elements: Iterable[WeylElement], statistic: Callable[[WeylElement], int]) -> Counter:
    """Distribution of ``l(w) + statistic(w)`` over the given elements."""
    acc: Counter = Counter()
    for w in elements:
        acc[w.length + statistic(w)] += 1
    return acc


def weyl_sum_naive(p1: ZeroPattern, p2: ZeroPattern) -> Counter:
    """Distribution of ``l(w) + dim(p1 cap w p2)`` by direct enumeration of ``S_v``."""
    return weyl_fold(enumerate_weyl(p1.dimvec),
                     lambda w: intersection_dim(p1, conjugate_pattern(p2, w)))


class _VertexPerms:
    """Per-vertex permutation tables, shared across all entries of one ``v``."""

    def __init__(self, dimvec: DimVector):
        self.perms = [permutation_array(d) for d in dimvec]
        self.inv = [inversion_counts(p).astype(np.int64) for p in self.perms]


def _arrow_counts(m1: np.ndarray, m2: np.ndarray, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """``out[a, b] = #{(r, c) in m2 : m1[dst[b, r], src[a, c]]}``."""
    out = np.zeros((src.shape[0], dst.shape[0]), dtype=np.int64)
    for r, c in zip(*np.nonzero(m2)):
        out += m1[dst[:, r][None, :], src[:, c][:, None]]
    return out


def _shift_rows(f: np.ndarray, shifts: np.ndarray, width: int) -> np.ndarray:
    out = np.zeros((f.shape[0], width), dtype=np.int64)
    for s in np.unique(shifts):
        rows = shifts == s
        out[rows, s:s + f.shape[1]] = f[rows, :width - s]
    return out


def weyl_sum(p1: ZeroPattern, p2: ZeroPattern, tables: _VertexPerms | None = None) -> Counter:
    """Distribution of ``l(w) + dim(p1 cap w p2)`` over ``w in S_v``.

    The sum factors along the chain of vertices: the state after vertex ``j``
    is, for each ``w_j``, the generating polynomial of the partial statistic.
    """
    if p1.dimvec != p2.dimvec:
        raise ValueError("patterns live on different dimension vectors")
    dimvec = p1.dimvec
    tables = tables or _VertexPerms(dimvec)
    width = sum(d * (d - 1) // 2 for d in dimvec) + p2.dim + 1
    f = _shift_rows(np.ones((tables.perms[0].shape[0], 1), dtype=np.int64), tables.inv[0], width)
    for j in range(len(dimvec) - 1):
        m = _arrow_counts(p1.masks[j], p2.masks[j], tables.perms[j], tables.perms[j + 1])
        g = np.zeros((tables.perms[j + 1].shape[0], width), dtype=np.int64)
        for val in np.unique(m):
            contrib = (m == val).T.astype(np.int64) @ f
            g[:, val:] += contrib[:, :width - val]
        f = _shift_rows(g, tables.inv[j + 1], width)
    total = f.sum(axis=0)
    return Counter({s: int(c) for s, c in enumerate(total) if c})


def generic_denominator(dimvec: Sequence[int]) -> IntLaurent:
    """``prod_i prod_{s=1}^{v_i} (1 - v^(-2s))``; clears every entry of Psi."""
    out = IntLaurent.const(1)
    for d in dimvec:
        for s in range(1, d + 1):
            out = out * IntLaurent({0: 1, -2 * s: -1})
    return out


def graded_hom_dim(
    weyl_total: IntLaurent,
    dim_v1: int,
    dim_v2: int,
    ambient_ranks: Sequence[int],
    flag_poincare_1: IntLaurent,
    flag_poincare_2: IntLaurent,
) -> RatFunc:
    """Graded dimension of ``Hom(S_1, S_2)`` for Springer-type sheaves over ``GL``.

    ``weyl_total`` is ``sum_w v^(2 (l(w) + dim V1 cap wV2))``.  For
    ``G = prod GL_{r}`` the equivariant Poincare series of ``G/B`` is
    ``v^(dim G/B) prod (1 - v^-2)^(-r)``; its ``v``-power cancels the leading
    ``v^(-dim G/B)`` of the general formula.
    """
    rank = sum(ambient_ranks)
    num = weyl_total.shift(-dim_v1 - dim_v2)
    den = _ONE_MINUS_V2 ** rank * flag_poincare_1 * flag_poincare_2
    return RatFunc(num, den)


@dataclass
class PairingContext:
    """Everything about ``v`` needed to evaluate Psi entries."""

    dimvec: DimVector
    ordered_kp: list[KostantPartition]
    shapes: list[MonomialShape]
    patterns: list[ZeroPattern]
    dims_R: list[int]
    parabolic: list[tuple[int, IntLaurent]]
    max_summands: int = DEFAULT_MAX_SUMMANDS
    _tables: _VertexPerms | None = field(default=None, repr=False, compare=False)

    @classmethod
    def build(cls, dimvec: Iterable[int], ordered_kp: Sequence[KostantPartition] | None = None,
              max_summands: int = DEFAULT_MAX_SUMMANDS) -> PairingContext:
        dimvec = as_dimvec(dimvec)
        if ordered_kp is None:
            from .decomp import pipeline_order
            ordered_kp = pipeline_order(dimvec)
        shapes = [reineke_exponents(c) for c in ordered_kp]
        patterns = [shape_pattern(s, dimvec) for s in shapes]
        return cls(
            dimvec=dimvec,
            ordered_kp=list(ordered_kp),
            shapes=shapes,
            patterns=patterns,
            dims_R=[p.dim for p in patterns],
            parabolic=[parabolic_data(s, dimvec) for s in shapes],
            max_summands=max_summands,
        )

    @property
    def size(self) -> int:
        return len(self.ordered_kp)

    def tables(self) -> _VertexPerms:
        if self._tables is None:
            n_terms = weyl_size(self.dimvec)
            if n_terms > self.max_summands:
                raise ResourceLimitError(
                    f"|S_v| = {n_terms} exceeds the limit of {self.max_summands} summands")
            self._tables = _VertexPerms(self.dimvec)
        return self._tables

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_tables"] = None
        return state


def psi_entry(ctx: PairingContext, c: int, c2: int) -> RatFunc:
    """``(E_{i,a_c}, E_{i,a_c2})`` for positions ``c, c2`` of the pipeline order."""
    counts = weyl_sum(ctx.patterns[c], ctx.patterns[c2], ctx.tables())
    return graded_hom_dim(
        counts_to_laurent(counts),
        ctx.dims_R[c],
        ctx.dims_R[c2],
        ctx.dimvec,
        ctx.parabolic[c][1],
        ctx.parabolic[c2][1],
    )


def _psi_row(args):
    ctx, c = args
    return [psi_entry(ctx, c, c2) for c2 in range(c + 1)]


def psi_matrix(ctx: PairingContext, workers: int = 1) -> list[list[RatFunc]]:
    """The symmetric Gram matrix of the form on the monomial basis, in pipeline order."""
    n = ctx.size
    ctx.tables()
    if workers > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_psi_row, [(ctx, c) for c in range(n)]))
    else:
        rows = [_psi_row((ctx, c)) for c in range(n)]
    psi = [[RatFunc.zero()] * n for _ in range(n)]
    for c, row in enumerate(rows):
        for c2, val in enumerate(row):
            psi[c][c2] = val
            psi[c2][c] = val
    log.debug("computed %dx%d Psi for v=%s", n, n, ctx.dimvec)
    return psi
