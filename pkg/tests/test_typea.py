from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from canbasis.typea import (
    KostantPartition,
    MonomialShape,
    PositiveRoot,
    enumerate_kp,
    positive_roots_ordered,
    reineke_exponents,
    reineke_word,
    roots_from_word,
)


def _word_roots_oracle(n: int) -> list[tuple[int, ...]]:
    """gamma_j = s_{i_1} ... s_{i_{j-1}} (e_{i_j}) with reflections written out as matrices."""
    cartan = [[2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(n)] for a in range(n)]

    def reflect(x, k):
        coef = sum(cartan[k][b] * x[b] for b in range(n))
        return [x[a] - (coef if a == k else 0) for a in range(n)]

    word = reineke_word(n)
    out = []
    for j, i in enumerate(word):
        x = [1 if a == i - 1 else 0 for a in range(n)]
        for k in reversed(word[:j]):
            x = reflect(x, k - 1)
        out.append(tuple(x))
    return out


def _kp_count_oracle(v) -> int:
    """Count multiplicity tuples bounded by feasibility, by brute force."""
    n = len(v)
    roots = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    bounds = [min(v[i - 1:j]) for i, j in roots]
    count = 0
    for mult in itertools.product(*(range(b + 1) for b in bounds)):
        w = [0] * n
        for (i, j), m in zip(roots, mult):
            for k in range(i - 1, j):
                w[k] += m
        count += tuple(w) == tuple(v)
    return count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_root_order_matches_word_oracle(n):
    closed = [r.vector(n) for r in positive_roots_ordered(n)]
    assert closed == _word_roots_oracle(n)
    assert roots_from_word(reineke_word(n), n) == closed


def test_root_order_examples():
    assert positive_roots_ordered(2) == [PositiveRoot(2, 2), PositiveRoot(1, 2), PositiveRoot(1, 1)]
    assert [str(r) for r in positive_roots_ordered(3)] == ["a33", "a23", "a22", "a13", "a12", "a11"]
    assert positive_roots_ordered(1) == [PositiveRoot(1, 1)]


def test_words():
    assert reineke_word(2) == (2, 1, 2)
    assert reineke_word(3) == (3, 2, 3, 1, 2, 3)
    assert reineke_word(1) == (1,)
    assert all(len(reineke_word(n)) == n * (n + 1) // 2 for n in range(1, 7))


def test_kp_examples():
    assert [c.mult for c in enumerate_kp((2, 2))] == [(2, 0, 2), (1, 1, 1), (0, 2, 0)]
    assert sorted(c.mult for c in enumerate_kp((1, 2, 1))) == sorted([
        (1, 0, 2, 0, 0, 1), (1, 0, 1, 0, 1, 0), (0, 1, 1, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0)])
    assert [c.mult for c in enumerate_kp((1,))] == [(1,)]


def test_zero_vector_has_one_partition():
    assert [c.mult for c in enumerate_kp((0, 0))] == [(0, 0, 0)]


dimvecs = st.lists(st.integers(0, 3), min_size=1, max_size=4)


@given(dimvecs)
def test_kp_count_matches_brute_force(v):
    kps = enumerate_kp(v)
    assert len(kps) == _kp_count_oracle(v)
    assert len({c.mult for c in kps}) == len(kps)
    assert all(c.weight() == tuple(v) for c in kps)


@given(dimvecs)
def test_reineke_shape_has_weight_v(v):
    for c in enumerate_kp(v):
        shape = reineke_exponents(c)
        assert shape.word == reineke_word(len(v))
        assert shape.weight(len(v)) == tuple(v)


def test_exponent_examples():
    c2 = KostantPartition((1, 1, 1), 2)
    assert reineke_exponents(c2).exps == (1, 2, 1)
    assert reineke_exponents(KostantPartition((0, 2, 0), 2)).exps == (0, 2, 2)
    assert reineke_exponents(KostantPartition((0, 1, 0, 0, 1, 0), 3)).exps == (0, 1, 1, 1, 1, 0)


def test_invalid_partition_rejected():
    with pytest.raises(ValueError):
        KostantPartition((1, 2), 2)
    with pytest.raises(ValueError):
        KostantPartition((1, -1, 0), 2)
    with pytest.raises(ValueError):
        MonomialShape((1, 2), (1,))


def test_multiplicity_lookup():
    c = KostantPartition((0, 1, 0, 0, 1, 0), 3)
    assert c.multiplicity(2, 3) == 1
    assert c.multiplicity(1, 2) == 1
    assert str(c) == "(0,1,0,0,1,0)"
