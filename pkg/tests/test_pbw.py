from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from sl12fusion.algebra import BASIS
from sl12fusion.modules import evaluation, kac_b2
from sl12fusion.pbw import (
    DEFAULT_ORDER,
    Element,
    Gen,
    Order,
    compositions,
    divided_power,
    identity_instances,
    identity_sides,
    is_normal,
    normal_form,
    verify_comm_identity,
    y2rs_element,
)

letters = st.tuples(st.sampled_from(BASIS), st.integers(0, 2))
words = st.lists(letters, max_size=4)


def W(*letters):
    return Element.word(letters)


@pytest.mark.parametrize(
    "word,expected",
    [
        ([("x1", 0), ("y1", 0)], -W(("y1", 0), ("x1", 0)) + Element.gen("h1", 0)),
        ([("x1", 0), ("x1", 0)], Element()),
        ([("x3", 1), ("x3", 1)], Element()),
        ([("x2", 0), ("y2", 1)], W(("y2", 1), ("x2", 0)) + Element.gen("h2", 1)),
        ([("y1", 0), ("x1", 2)], -W(("x1", 2), ("y1", 0)) + Element.gen("h1", 2)),
        ([("h1", 0), ("h2", 3)], W(("h2", 3), ("h1", 0))),
    ],
)
def test_normal_form_examples(word, expected):
    assert normal_form(W(*word)) == expected


@given(words)
def test_normal_form_is_idempotent_and_normal(word):
    nf = normal_form(W(*word))
    assert is_normal(nf)
    assert normal_form(nf) == nf


@given(words, words, words)
def test_normal_form_is_associative(a, b, c):
    A, B, C = W(*a), W(*b), W(*c)
    assert normal_form(normal_form(A * B) * C) == normal_form(A * normal_form(B * C))


@given(words)
def test_normal_form_preserves_degree_and_parity(word):
    nf = normal_form(W(*word))
    d = sum(deg for _, deg in word)
    assert set(nf.degree_parts()) <= {d}
    parity = sum(Gen(n, deg).parity for n, deg in word) % 2
    assert nf.parities() <= {parity}


MODULE = evaluation(kac_b2((Fraction(3, 2), 2)), Fraction(2))


@given(words)
def test_normal_form_acts_like_the_word(word):
    X = W(*word)
    for i in range(0, MODULE.dim, 3):
        v = MODULE.module.basis_vector(i)
        assert MODULE.module.apply(X, v) == MODULE.module.apply(normal_form(X), v)


@given(words)
def test_orders_agree_on_a_module(word):
    other = Order(tuple(reversed(BASIS)), degree="asc")
    X = W(*word)
    a, b = normal_form(X), normal_form(X, other)
    assert is_normal(b, other)
    v = MODULE.vector
    assert MODULE.module.apply(a, v) == MODULE.module.apply(b, v)


def test_order_validation():
    with pytest.raises(ValueError):
        Order(("x1",))
    with pytest.raises(ValueError):
        Order(BASIS, degree="sideways")
    assert DEFAULT_ORDER == Order()


def _compositions_oracle(r, s):
    return sorted(
        bs for bs in product(range(r + 1), repeat=s + 1) if sum(bs) == r and sum(i * b for i, b in enumerate(bs)) == s
    )


@pytest.mark.parametrize("r,s", [(r, s) for r in range(4) for s in range(5)])
def test_compositions_match_brute_force(r, s):
    assert sorted(compositions(r, s)) == _compositions_oracle(r, s)


def test_y2rs_small_cases():
    assert y2rs_element(-1, 2) == Element()
    assert y2rs_element(0, 0) == Element.one()
    assert y2rs_element(1, 2) == Element.gen("y2", 2)
    assert normal_form(y2rs_element(2, 2)) == normal_form(divided_power("y2", 1, 2) + W(("y2", 0), ("y2", 2)))
    assert normal_form(y2rs_element(2, 2, start=1)) == divided_power("y2", 1, 2)


def test_divided_power():
    assert divided_power("y2", 0, 3) == Element({(Gen("y2", 0),) * 3: Fraction(1, 6)})
    assert divided_power("y2", 0, -1) == Element()


def test_identity_instances_cover_every_equation():
    eqs = {eq for eq, _ in identity_instances(1, 1)}
    assert eqs == {str(i) for i in range(1, 10)}


@pytest.mark.parametrize("eq,params", list(identity_instances(2, 2))[::7])
def test_commutation_identities(eq, params):
    assert verify_comm_identity(eq, **params).ok


def test_identity_check_detects_a_wrong_side():
    lhs, rhs = identity_sides("1", a=1, cs=(0, 2))
    assert normal_form(lhs) == normal_form(rhs)
    assert normal_form(lhs) != normal_form(rhs + Element.gen("y1", 3))
