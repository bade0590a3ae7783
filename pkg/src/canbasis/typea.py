"""Combinatorics of the equioriented A_n quiver 1 -> 2 -> ... -> n.

Positive roots are ``alpha_ij = e_i + ... + e_j`` (1-based, ``i <= j``).
Kostant partitions are stored as multiplicity tuples in the root order
returned by :func:`positive_roots_ordered`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "DimVector",
    "PositiveRoot",
    "KostantPartition",
    "MonomialShape",
    "as_dimvec",
    "positive_roots_ordered",
    "roots_from_word",
    "enumerate_kp",
    "reineke_word",
    "reineke_exponents",
]

DimVector = tuple[int, ...]


def as_dimvec(v: Iterable[int]) -> DimVector:
    out = tuple(int(x) for x in v)
    if not out:
        raise ValueError("dimension vector must have at least one entry")
    if any(x < 0 for x in out):
        raise ValueError(f"dimension vector entries must be nonnegative: {out}")
    return out


class PositiveRoot(NamedTuple):
    """The root ``alpha_ij`` with ``1 <= i <= j <= n``."""

    i: int
    j: int

    def vector(self, n: int) -> tuple[int, ...]:
        return tuple(1 if self.i <= k + 1 <= self.j else 0 for k in range(n))

    def __str__(self) -> str:
        return f"a{self.i}{self.j}" if self.i < 10 and self.j < 10 else f"a({self.i},{self.j})"


def positive_roots_ordered(n: int) -> list[PositiveRoot]:
    """Positive roots of A_n in the order induced by the adapted reduced word.

    ``alpha_ij`` precedes ``alpha_i'j'`` iff ``i > i'``, or ``i == i'`` and ``j > j'``.

    >>> [str(r) for r in positive_roots_ordered(2)]
    ['a22', 'a12', 'a11']
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return [PositiveRoot(i, j) for i in range(n, 0, -1) for j in range(n, i - 1, -1)]


def _reflect(x: list[int], k: int) -> list[int]:
    # s_k(x) = x - <x, alpha_k^vee> alpha_k for the A_n Cartan matrix, k 1-based
    n = len(x)
    pairing = 2 * x[k - 1]
    if k >= 2:
        pairing -= x[k - 2]
    if k < n:
        pairing -= x[k]
    y = list(x)
    y[k - 1] -= pairing
    return y


def roots_from_word(word: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """``gamma_j = s_{i_1} ... s_{i_{j-1}}(e_{i_j})`` as root-lattice vectors."""
    out = []
    for j, ij in enumerate(word):
        x = [0] * n
        x[ij - 1] = 1
        for k in reversed(word[:j]):
            x = _reflect(x, k)
        out.append(tuple(x))
    return out


@dataclass(frozen=True)
class KostantPartition:
    """Multiplicities of positive roots of A_n, in root order."""

    mult: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.mult) != self.n * (self.n + 1) // 2:
            raise ValueError(f"expected {self.n * (self.n + 1) // 2} multiplicities, got {len(self.mult)}")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def roots(self) -> list[PositiveRoot]:
        return positive_roots_ordered(self.n)

    def multiplicity(self, i: int, j: int) -> int:
        return self.mult[self.roots.index(PositiveRoot(i, j))]

    def as_dict(self) -> dict[PositiveRoot, int]:
        return dict(zip(self.roots, self.mult))

    def weight(self) -> DimVector:
        out = [0] * self.n
        for root, m in zip(self.roots, self.mult):
            for k in range(root.i - 1, root.j):
                out[k] += m
        return tuple(out)

    def __iter__(self):
        return iter(self.mult)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.mult)) + ")"


@dataclass(frozen=True)
class MonomialShape:
    """A pair ``(i, a)`` describing the monomial ``E_{i_1}^{(a_1)} ... E_{i_m}^{(a_m)}``."""

    word: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) != len(self.exps):
            raise ValueError("word and exponents must have equal length")

    def weight(self, n: int) -> DimVector:
        out = [0] * n
        for i, a in zip(self.word, self.exps):
            out[i - 1] += a
        return tuple(out)


def enumerate_kp(v: Iterable[int]) -> list[KostantPartition]:
    """All Kostant partitions of ``v``.

    Recursion runs over roots in root order, trying the largest feasible
    multiplicity first.

    >>> [str(c) for c in enumerate_kp((2, 2))]
    ['(2,0,2)', '(1,1,1)', '(0,2,0)']
    """
    v = as_dimvec(v)
    n = len(v)
    roots = positive_roots_ordered(n)
    out: list[KostantPartition] = []
    mult = [0] * len(roots)

    def rec(k: int, rem: list[int]) -> None:
        if k == len(roots):
            if not any(rem):
                out.append(KostantPartition(tuple(mult), n))
            return
        i, j = roots[k]
        # later roots all start left of i, so whatever they cover right of i
        # they also cover at i
        if j == i and i < n and rem[i - 1] < max(rem[i:]):
            return
        for m in range(min(rem[i - 1:j]), -1, -1):
            mult[k] = m
            for t in range(i - 1, j):
                rem[t] -= m
            rec(k + 1, rem)
            for t in range(i - 1, j):
                rem[t] += m
        mult[k] = 0

    rec(0, list(v))
    return out


def reineke_word(n: int) -> tuple[int, ...]:
    """``(n), (n-1, n), ..., (1, 2, ..., n)`` concatenated.

    >>> reineke_word(3)
    (3, 2, 3, 1, 2, 3)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(k for i in range(n, 0, -1) for k in range(i, n + 1))


def reineke_exponents(c: KostantPartition) -> MonomialShape:
    """Monomial shape ``(i, a_c)`` attached to a Kostant partition.

    For start vertex ``i`` the block is the tail sums
    ``(m_ii + ... + m_in, m_i,i+1 + ... + m_in, ..., m_in)``.
    """
    n = c.n
    m = c.as_dict()
    exps: list[int] = []
    for i in range(n, 0, -1):
        for k in range(i, n + 1):
            exps.append(sum(m[PositiveRoot(i, j)] for j in range(k, n + 1)))
    return MonomialShape(reineke_word(n), tuple(exps))
