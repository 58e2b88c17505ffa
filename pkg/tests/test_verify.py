from fractions import Fraction as F

import pytest

from sl12fusion import verify


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suites_pass_at_small_size(name):
    cases = verify.run([name], max_l2=2, max_n=4)
    assert cases
    assert [c for c in cases if not c.passed] == []


def test_all_expands_to_every_suite():
    suites = {c.suite for c in verify.run(["all"], max_l2=1, max_n=2)}
    assert suites == set(verify.SUITES)


@pytest.mark.parametrize(
    "lam,expected",
    [
        ((F(1), 1), [(F(0), F(0)), (F(1), F(0)), (F(1), F(1))]),
        ((F(2), 2), [(F(1), F(0)), (F(1), F(1)), (F(2), F(1)), (F(2), F(2))]),
    ],
)
def test_g0_expected(lam, expected):
    assert verify.g0_expected(*lam) == expected


def test_kac_grid():
    assert list(verify.kac_grid(1)) == [(F(0), 1), (F(1), 1), (F(7, 3), 1), (F(1), 1), (F(-2), 1)]


def test_case_record():
    c = verify._case("s", "c", (1, 2), 3, 3)
    assert c.passed
    assert c.to_record() == {"suite": "s", "case": "c", "params": "(1, 2)", "expected": "3", "computed": "3", "pass": True}
