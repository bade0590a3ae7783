"""Coordinate-subspace geometry of flags of type (i, a).

The Borel subgroup is lower triangular, so a B-stable descending flag is
spanned by trailing coordinates.  Position ``p`` at vertex ``j`` gets the
*level* of the flag step at which it drops out; a map on arrow
``j -> j+1`` preserves the flag iff entry ``(r, c)`` vanishes whenever the
row's level is smaller than the column's.

Indices are 0-based throughout the code; permutations are one-line tuples
``w[k] = w(k)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .laurent import IntLaurent, quantum_factorial
from .typea import DimVector, KostantPartition, MonomialShape, as_dimvec, reineke_exponents

__all__ = [
    "LevelAssignment",
    "ZeroPattern",
    "WeylElement",
    "inversions",
    "permutation_array",
    "levels_from_shape",
    "pattern_from_levels",
    "shape_pattern",
    "conjugate_pattern",
    "intersection_dim",
    "enumerate_weyl",
    "weyl_size",
    "parabolic_data",
    "dim_gl",
    "orbit_dim",
]

LevelAssignment = tuple[tuple[int, ...], ...]


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def permutation_array(n: int) -> np.ndarray:
    """All ``n!`` permutations of ``range(n)`` as rows of an int8 array."""
    out = np.zeros((1, 0), dtype=np.int8)
    for k in range(n):
        rows = out.shape[0]
        grown = np.empty((rows * (k + 1), k + 1), dtype=np.int8)
        for pos in range(k + 1):
            block = grown[pos * rows:(pos + 1) * rows]
            block[:, :pos] = out[:, :pos]
            block[:, pos] = k
            block[:, pos + 1:] = out[:, pos:]
        out = grown
    return out


def inversion_counts(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    inv = np.zeros(perms.shape[0], dtype=np.int16)
    for a in range(n):
        for b in range(a + 1, n):
            inv += perms[:, a] > perms[:, b]
    return inv


class ZeroPattern:
    """A coordinate subspace of ``R_v``: one boolean mask per arrow ``j -> j+1``.

    Mask ``j`` has shape ``(v[j+1], v[j])``; ``True`` marks an allowed entry.
    """

    __slots__ = ("dimvec", "masks")

    def __init__(self, dimvec: Sequence[int], masks: Sequence[np.ndarray]):
        dimvec = as_dimvec(dimvec)
        if len(masks) != len(dimvec) - 1:
            raise ValueError("need one mask per arrow")
        frozen = []
        for j, m in enumerate(masks):
            m = np.array(m, dtype=bool).reshape(dimvec[j + 1], dimvec[j])
            m.flags.writeable = False
            frozen.append(m)
        self.dimvec = dimvec
        self.masks = tuple(frozen)

    @classmethod
    def full(cls, dimvec: Sequence[int]) -> ZeroPattern:
        d = as_dimvec(dimvec)
        return cls(d, [np.ones((d[j + 1], d[j]), dtype=bool) for j in range(len(d) - 1)])

    @classmethod
    def empty(cls, dimvec: Sequence[int]) -> ZeroPattern:
        d = as_dimvec(dimvec)
        return cls(d, [np.zeros((d[j + 1], d[j]), dtype=bool) for j in range(len(d) - 1)])

    @property
    def dim(self) -> int:
        return int(sum(m.sum() for m in self.masks))

    def positions(self) -> Iterator[tuple[int, int, int]]:
        """Allowed entries as ``(arrow, row, col)`` triples."""
        for j, m in enumerate(self.masks):
            for r, c in zip(*np.nonzero(m)):
                yield j, int(r), int(c)

    def __and__(self, other: ZeroPattern) -> ZeroPattern:
        _check_same(self, other)
        return ZeroPattern(self.dimvec, [a & b for a, b in zip(self.masks, other.masks)])

    def __eq__(self, other):
        if not isinstance(other, ZeroPattern):
            return NotImplemented
        return self.dimvec == other.dimvec and all(
            np.array_equal(a, b) for a, b in zip(self.masks, other.masks))

    def __hash__(self):
        return hash((self.dimvec, tuple(m.tobytes() for m in self.masks)))

    def to_lists(self) -> list[list[list[int]]]:
        return [m.astype(int).tolist() for m in self.masks]

    @classmethod
    def from_lists(cls, dimvec: Sequence[int], data: Sequence) -> ZeroPattern:
        d = as_dimvec(dimvec)
        return cls(d, [np.array(m, dtype=bool).reshape(d[j + 1], d[j]) for j, m in enumerate(data)])

    def fmt(self) -> str:
        """Compact text form, e.g. ``(0/*), (* 0)``: rows split by ``/``."""
        arrows = []
        for m in self.masks:
            arrows.append("/".join(" ".join("*" if x else "0" for x in row) for row in m))
        return ", ".join(f"({a})" for a in arrows)

    @classmethod
    def parse(cls, dimvec: Sequence[int], text: str) -> ZeroPattern:
        """Inverse of :meth:`fmt`."""
        d = as_dimvec(dimvec)
        chunks = [t.strip().strip("()") for t in text.split(",")] if len(d) > 1 else []
        if len(chunks) != len(d) - 1:
            raise ValueError(f"expected {len(d) - 1} arrow blocks in {text!r}")
        masks = []
        for j, chunk in enumerate(chunks):
            rows = [r.split() for r in chunk.split("/")] if chunk else []
            masks.append(np.array([[x == "*" for x in r] for r in rows], dtype=bool).reshape(d[j + 1], d[j]))
        return cls(d, masks)

    def __repr__(self) -> str:
        return f"ZeroPattern({self.dimvec}, {self.fmt()!r})"


def _check_same(p1: ZeroPattern, p2: ZeroPattern) -> None:
    if p1.dimvec != p2.dimvec:
        raise ValueError(f"patterns live on different dimension vectors {p1.dimvec} != {p2.dimvec}")


@dataclass(frozen=True)
class WeylElement:
    """An element of ``S_v``: one permutation per vertex."""

    perms: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return sum(inversions(p) for p in self.perms)

    def inverse(self) -> WeylElement:
        out = []
        for p in self.perms:
            q = [0] * len(p)
            for k, pk in enumerate(p):
                q[pk] = k
            out.append(tuple(q))
        return WeylElement(tuple(out))

    @classmethod
    def identity(cls, dimvec: Sequence[int]) -> WeylElement:
        return cls(tuple(tuple(range(d)) for d in dimvec))


def levels_from_shape(shape: MonomialShape, dimvec: Sequence[int]) -> LevelAssignment:
    """Flag level (1-based step index) of each coordinate at each vertex.

    At vertex ``j`` the steps ``k`` with ``i_k == j`` are scanned in order and
    each claims the next ``a_k`` positions.
    """
    dimvec = as_dimvec(dimvec)
    levels: list[list[int]] = [[] for _ in dimvec]
    for k, (i, a) in enumerate(zip(shape.word, shape.exps), start=1):
        levels[i - 1].extend([k] * a)
    for j, lv in enumerate(levels):
        if len(lv) != dimvec[j]:
            raise ValueError(f"shape has weight {len(lv)} at vertex {j + 1}, expected {dimvec[j]}")
    return tuple(tuple(lv) for lv in levels)


def pattern_from_levels(levels: LevelAssignment) -> ZeroPattern:
    dimvec = tuple(len(lv) for lv in levels)
    masks = []
    for j in range(len(levels) - 1):
        rows = np.array(levels[j + 1], dtype=int).reshape(-1, 1)
        cols = np.array(levels[j], dtype=int).reshape(1, -1)
        masks.append(rows >= cols)
    return ZeroPattern(dimvec, masks)


def shape_pattern(shape: MonomialShape, dimvec: Sequence[int]) -> ZeroPattern:
    """The subspace ``R_{i,a}`` of representations preserving the flag of type (i, a)."""
    return pattern_from_levels(levels_from_shape(shape, dimvec))


def conjugate_pattern(p: ZeroPattern, w: WeylElement) -> ZeroPattern:
    """Image of ``p`` under the permutation matrices of ``w``."""
    if len(w.perms) != len(p.dimvec):
        raise ValueError("Weyl element does not match the dimension vector")
    masks = []
    for j, m in enumerate(p.masks):
        out = np.zeros_like(m)
        rows = np.array(w.perms[j + 1], dtype=int)
        cols = np.array(w.perms[j], dtype=int)
        if m.size:
            out[np.ix_(rows, cols)] = m
        masks.append(out)
    return ZeroPattern(p.dimvec, masks)


def intersection_dim(p1: ZeroPattern, p2: ZeroPattern) -> int:
    return (p1 & p2).dim


def weyl_size(dimvec: Sequence[int]) -> int:
    return math.prod(math.factorial(d) for d in dimvec)


def enumerate_weyl(dimvec: Sequence[int]) -> Iterator[WeylElement]:
    """Lazily enumerate ``S_v = prod_j S_{v_j}``."""
    dimvec = as_dimvec(dimvec)
    for perms in itertools.product(*(itertools.permutations(range(d)) for d in dimvec)):
        yield WeylElement(tuple(perms))


def dim_gl(dimvec: Sequence[int]) -> int:
    return sum(d * d for d in dimvec)


def parabolic_data(shape: MonomialShape, dimvec: Sequence[int]) -> tuple[int, IntLaurent]:
    """``(dim P_{i,a}, chi_v(P_{i,a}/B))`` for the flag stabilizer ``P_{i,a}``.

    ``P_{i,a}`` is block lower triangular with one block per nonzero ``a_k``.
    """
    dimvec = as_dimvec(dimvec)
    if shape.weight(len(dimvec)) != dimvec:
        raise ValueError("shape weight does not match the dimension vector")
    dim_p = sum(d * (d + 1) // 2 for d in dimvec)
    dim_p += sum(a * (a - 1) // 2 for a in shape.exps)
    return dim_p, quantum_factorial(shape.exps)


def orbit_dim(c: KostantPartition) -> int:
    """``dim GL_v - dim P_{i,a_c} + dim R_{i,a_c}``."""
    dimvec = c.weight()
    shape = reineke_exponents(c)
    dim_p, _ = parabolic_data(shape, dimvec)
    return dim_gl(dimvec) - dim_p + shape_pattern(shape, dimvec).dim
