import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sl12fusion.characters import (
    EXTERIOR,
    ONE,
    FormalCharacter,
    GradedCharacter,
    cv_char_formula,
    demazure_char_formula,
    demazure_sizes,
    fusion_char_formula,
    gl2_char,
    truncated_char_formula,
    truncated_sizes,
    weyl_char_formula,
)
from sl12fusion.combinatorics import partitions

halves = st.fractions(min_value=-3, max_value=3, max_denominator=2)
chars = st.dictionaries(st.tuples(halves, st.integers(-3, 3)), st.integers(-3, 3), max_size=4).map(FormalCharacter)


def _kac_oracle(l1, l2):
    # g0-decomposition of the size-l2 Kac module, summed from gl(2) strings.
    out = FormalCharacter()
    for a, b in [(l1, l2), (l1, l2 - 1), (l1 - 1, l2 - 1), (l1 - 1, l2 - 2)]:
        out = out + FormalCharacter.of_weights((a - i, b - 2 * i) for i in range(b + 1))
    return out


def _product_oracle(l1, sizes):
    out = ONE
    for k, p in enumerate(sizes):
        out = out * _kac_oracle(F(l1) if k == 0 else F(0), p)
    return out


@given(chars, chars, chars)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * ONE == a
    assert a - a == FormalCharacter()


@given(chars)
def test_division_undoes_multiplication(a):
    u = FormalCharacter({(F(1, 2), 1): 1, (F(-1, 2), -1): -1})
    assert (a * u).divide_root_difference() == a
    assert (a * u * u).divide_root_difference(2) == a


def test_division_raises_on_remainder():
    with pytest.raises(ArithmeticError):
        FormalCharacter.e(0, 0).divide_root_difference()


def test_exterior():
    assert EXTERIOR == FormalCharacter.of_weights([(0, 0), (0, 1), (-1, -1), (-1, 0)])
    assert EXTERIOR.mass == 4


@pytest.mark.parametrize("l1", [F(0), F(1), F(7, 3), F(-2)])
def test_weyl_of_size_one_is_the_kac_character(l1):
    assert weyl_char_formula(l1, 1) == _kac_oracle(l1, 1)


@pytest.mark.parametrize("l1,l2", [(F(0), 0), (F(1), 2), (F(5, 2), 4)])
def test_weyl_formula(l1, l2):
    assert weyl_char_formula(l1, l2) == _product_oracle(l1, (1,) * l2)


@pytest.mark.parametrize("xi", [xi for n in range(1, 6) for xi in partitions(n)])
def test_cv_formula(xi):
    ch = cv_char_formula(F(3, 2), xi)
    assert ch == _product_oracle(F(3, 2), xi)
    assert ch.is_effective()


@pytest.mark.parametrize("ell,l2", [(e, l) for e in (1, 2, 3) for l in range(1, 7)])
def test_demazure_formula(ell, l2):
    assert demazure_char_formula(ell, F(1), l2) == _product_oracle(F(1), demazure_sizes(ell, l2))


@pytest.mark.parametrize("N,l2", [(n, l) for n in range(1, 5) for l in range(n + 1, 7)])
def test_truncated_formula(N, l2):
    assert truncated_char_formula(N, F(0), l2) == _product_oracle(F(0), truncated_sizes(N, l2))


def test_truncated_formula_domain():
    with pytest.raises(ValueError):
        truncated_char_formula(3, 0, 3)


@pytest.mark.parametrize(
    "ell,l2,sizes",
    [(1, 3, (1, 1, 1)), (2, 3, (2, 1)), (2, 4, (2, 2)), (3, 7, (3, 3, 1)), (2, 0, ())],
)
def test_demazure_sizes(ell, l2, sizes):
    assert demazure_sizes(ell, l2) == sizes


@pytest.mark.parametrize("N,l2,sizes", [(2, 5, (3, 2)), (3, 7, (3, 2, 2)), (4, 4, (1, 1, 1, 1)), (1, 3, (3,))])
def test_truncated_sizes(N, l2, sizes):
    assert truncated_sizes(N, l2) == sizes


def test_fusion_formula_matches_cv():
    assert fusion_char_formula(F(1), (2, 1)) == cv_char_formula(F(1), (2, 1))


def test_gl2_char():
    assert gl2_char(F(1, 2), 2) == FormalCharacter.of_weights([(F(1, 2), 2), (F(-1, 2), 0), (F(-3, 2), -2)])


def test_graded_character():
    g = GradedCharacter({(F(1), 1, 0): 1, (F(0), 0, 1): 2, (F(1), 1, 1): 1})
    assert g.ungraded() == FormalCharacter({(1, 1): 2, (0, 0): 2})
    assert g.degree_slice(1) == FormalCharacter({(0, 0): 2, (1, 1): 1})
    assert g.graded_dims == (1, 3)
    assert g.mass == 4
    json.loads(g.to_json())


def test_json_is_sorted_and_exact():
    ch = FormalCharacter({(F(1, 3), 0): 2, (F(2), 1): 1})
    recs = json.loads(ch.to_json())
    assert recs == [{"h1": "2", "h2": "1", "mult": 1}, {"h1": "1/3", "h2": "0", "mult": 2}]
    assert ch[(F(1, 3), 0)] == 2 and ch[(0, 0)] == 0


@pytest.mark.parametrize("l1", [F(0), F(5, 2)])
def test_weyl_coefficient_below_the_top(l1):
    ch = weyl_char_formula(l1, 2)
    assert ch[(l1 - 1, 0)] == 4
    assert ch[(l1, 2)] == 1
    assert ch.mass == 16


def test_kac_g0_summands_for_size_one():
    from sl12fusion.modules import g0_decompose, kac_b2

    assert sorted(g0_decompose(kac_b2((F(3), 1)).module)) == [(F(2), F(0)), (F(3), F(0)), (F(3), F(1))]
