from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from sl12fusion.exactla import (
    BlockSubspace,
    SparseMatrix,
    Subspace,
    closure,
    integer_scaled,
    matvec_dense,
    nullspace,
    rank,
    rref,
)

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def _det(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def _minor_rank(m):
    rows, cols = len(m), len(m[0])
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if _det([[m[i][j] for j in cs] for i in rs]):
                    return k
    return 0


@given(matrices())
def test_rank_matches_minor_oracle(m):
    assert rank(m) == _minor_rank(m)


@given(matrices())
def test_rref_is_idempotent_and_preserves_shape(m):
    red, r = rref(m)
    again, r2 = rref(red)
    assert (again, r2) == (red, r)
    assert len(red) == len(m)
    assert all(not any(row) for row in red[r:])


@given(matrices())
def test_nullspace_is_kernel_with_right_dimension(m):
    ker = nullspace(m)
    cols = len(m[0])
    assert ker.dim == cols - rank(m)
    for v in ker.basis:
        assert not any(matvec_dense(m, v))


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_subspace_contains_combinations(m, coeffs):
    cols = len(m[0])
    S = Subspace(cols, m)
    v = [sum((c * row[j] for c, row in zip(coeffs, m)), Fraction(0)) for j in range(cols)]
    assert S.contains(v)
    coords = S.coordinates(v)
    back = [sum((c * row[j] for c, row in zip(coords, S.basis)), Fraction(0)) for j in range(cols)]
    assert back == v


def test_coordinates_reject_outside_vectors():
    S = Subspace(3, [[1, 0, 0]])
    with pytest.raises(ValueError):
        S.coordinates([0, 1, 0])


def test_quotient_basis():
    big = Subspace(3, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    small_ = Subspace(3, [[1, 1, 0]])
    assert len(big.quotient_basis(small_)) == 2


def test_closure_of_a_nilpotent_shift():
    shift = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    assert closure([1, 0, 0], [shift]).dim == 3
    assert closure([0, 0, 1], [shift]).dim == 1


@given(matrices(3, 3), st.dictionaries(st.integers(0, 2), small, max_size=3))
def test_sparse_apply_matches_dense(m, v):
    m = [row + [Fraction(0)] * (3 - len(row)) for row in m]
    sp = SparseMatrix.from_dense(m)
    dense_v = [v.get(i, Fraction(0)) for i in range(3)]
    got = sp.apply(v)
    want = matvec_dense(m, dense_v)
    assert [got.get(i, 0) for i in range(len(m))] == want
    assert sp.to_dense() == m


def test_sparse_identity_and_zero():
    assert SparseMatrix.identity(3).apply({1: Fraction(5)}) == {1: Fraction(5)}
    assert SparseMatrix.zero(2, 2).is_zero()


@given(st.dictionaries(st.integers(0, 5), small.filter(bool), min_size=1, max_size=5))
def test_integer_scaled_is_a_positive_multiple(v):
    w = integer_scaled(v)
    assert all(type(x) is int for x in w.values())
    i = next(iter(v))
    ratio = Fraction(w[i]) / v[i]
    assert ratio > 0
    assert all(Fraction(w[k]) == ratio * v[k] for k in v)


def _blocks():
    block_of = ["a", "a", "b", "b", "b"]
    position = [0, 1, 0, 1, 2]
    return BlockSubspace(block_of, position, {"a": 2, "b": 3})


def test_block_subspace_checkpoints():
    S = _blocks()
    assert S.add({0: Fraction(1, 2)})
    S.checkpoint()
    assert S.add({2: Fraction(1), 3: Fraction(1)})
    assert not S.add({2: Fraction(3), 3: Fraction(3)})
    S.checkpoint()
    assert S.dim == 2
    assert S.contains({0: Fraction(7)}, upto=0)
    assert not S.contains({2: Fraction(2), 3: Fraction(2)}, upto=0)
    assert S.contains({2: Fraction(2), 3: Fraction(2)}, upto=1)
    assert S.block_dim("b", upto=0) == 0
    assert S.block_dim("b") == 1


def test_block_subspace_rejects_mixed_vectors():
    with pytest.raises(ValueError):
        _blocks().add({0: Fraction(1), 2: Fraction(1)})


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=5))
def test_block_subspace_dim_equals_rank(rows):
    S = BlockSubspace([0, 0, 0], [0, 1, 2], {0: 3})
    for r in rows:
        S.add({i: Fraction(x) for i, x in enumerate(r) if x})
    assert S.dim == _minor_rank(rows)
