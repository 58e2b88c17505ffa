"""Verification grid shared by the ``verify`` command.

Each suite yields :class:`Case` records; a case passes when the computed
value equals the expected one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Dict, Iterator, List

from . import algebra
from .characters import (
    cv_char_formula,
    demazure_char_formula,
    demazure_sizes,
    truncated_char_formula,
    weyl_char_formula,
)
from .combinatorics import (
    cv_basis_index_set,
    decomposition_check,
    descents,
    dim_identity_sides,
    partitions,
    weyl_monomial_pool,
)
from .fusion import cv_spec, demazure_spec, fuse, truncated_spec, weyl_spec
from .modules import g0_decompose, is_irreducible, kac_b2
from .pbw import identity_instances, verify_comm_identity
from .presentations import (
    CVDatum,
    check_basis_independence,
    check_cv_relations,
    check_demazure,
    check_demazure_lowest_weight,
    check_garland_action,
    check_truncated,
    check_weyl_relations,
)


@dataclass(frozen=True)
class Case:
    suite: str
    case: str
    params: str
    expected: str
    computed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_record(self) -> dict:
        return {
            "suite": self.suite,
            "case": self.case,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


def _case(suite, case, params, expected, computed) -> Case:
    return Case(suite, case, str(params), str(expected), str(computed))


KAC_L1 = (Fraction(0), Fraction(1), Fraction(7, 3), None, Fraction(-2))  # None stands for l1 = l2


def kac_grid(max_l2: int):
    for l2 in range(1, max_l2 + 1):
        for l1 in KAC_L1:
            yield (Fraction(l2) if l1 is None else l1, l2)


def g0_expected(l1, l2) -> List:
    """Highest weights of the g0-summands of the b(2) Kac module."""
    out = [(l1, l2 - 1), (l1 - 1, l2 - 1), (l1, l2)]
    if l2 != 1:
        out.append((l1 - 1, l2 - 2))
    return sorted((Fraction(a), Fraction(b)) for a, b in out)


def suite_algebra(**_) -> Iterator[Case]:
    yield _case("algebra", "super-Jacobi", "8^3 triples", [], algebra.jacobi_defects())
    mismatches = []
    for a in algebra.BASIS:
        for b in algebra.BASIS:
            m = algebra.supercommutator(algebra.matrix(a), algebra.matrix(b), algebra.parity(a), algebra.parity(b))
            if algebra.to_matrix(algebra.bracket(a, b)) != m:
                mismatches.append((a, b))
    yield _case("algebra", "bracket vs supercommutator", "64 pairs", [], mismatches)


def suite_comm(max_count: int = 3, max_degree: int = 3, **_) -> Iterator[Case]:
    counts: Dict[str, List[int]] = {}
    for eq, params in identity_instances(max_count, max_degree):
        ok = verify_comm_identity(eq, **params).ok
        tally = counts.setdefault(eq, [0, 0])
        tally[0] += 1
        tally[1] += ok
    for eq in sorted(counts):
        total, good = counts[eq]
        yield _case("comm", f"identity {eq}", f"count<={max_count},degree<={max_degree}", total, good)


def suite_kac(max_l2: int = 4, **_) -> Iterator[Case]:
    for l1, l2 in kac_grid(max_l2):
        cm = kac_b2((l1, l2))
        p = f"({l1},{l2})"
        yield _case("kac", "dim", p, 4 * l2, cm.dim)
        yield _case("kac", "irreducible iff typical", p, algebra.is_typical((l1, l2)), is_irreducible(cm))
        yield _case("kac", "g0 decomposition", p, g0_expected(l1, l2), sorted(g0_decompose(cm.module)))


def suite_weyl(max_l2: int = 3, l1=Fraction(1), **_) -> Iterator[Case]:
    for l2 in range(1, max_l2 + 1):
        G = fuse(weyl_spec(l1, l2))
        p = f"({l1},{l2})"
        yield _case("weyl", "dim", p, 4**l2, G.dim)
        yield _case("weyl", "relations", p, True, check_weyl_relations(G, (l1, l2)).ok)
        yield _case("weyl", "garland", p, True, check_garland_action(G, l2).ok)
        yield _case("weyl", "monomial pool rank", p, G.dim, check_basis_independence(G, weyl_monomial_pool(l2)).rank)
        yield _case("weyl", "character", p, True, G.character() == weyl_char_formula(l1, l2))


def suite_cv(max_n: int = 4, **_) -> Iterator[Case]:
    for l1 in (Fraction(0), Fraction(2)):
        for n in range(1, max_n + 1):
            for xi in partitions(n):
                G = fuse(cv_spec(l1, xi))
                p = f"({l1},{xi})"
                yield _case("cv", "dim", p, 4 ** len(xi) * prod(xi), G.dim)
                yield _case("cv", "relations", p, True, check_cv_relations(G, CVDatum(l1, xi)).ok)
                pool = cv_basis_index_set(xi)
                yield _case("cv", "basis rank", p, (G.dim, G.dim), (len(pool), check_basis_independence(G, pool).rank))
                yield _case("cv", "character", p, True, G.character() == cv_char_formula(l1, xi))


def suite_combinatorics(max_n: int = 8, **_) -> Iterator[Case]:
    for n in range(max_n + 1):
        for xi in partitions(n):
            left, right = dim_identity_sides(xi)
            yield _case("combinatorics", "dim identity", xi, right, left)
    for n in range(min(max_n, 7) + 1):
        for xi in partitions(n):
            for t in descents(xi):
                yield _case("combinatorics", "I decomposition", f"{xi},t={t}", True, decomposition_check(xi, t))


def suite_demazure(max_l2: int = 4, l1=Fraction(1), **_) -> Iterator[Case]:
    for ell in (1, 2, 3):
        for l2 in range(1, max_l2 + 1):
            G = fuse(demazure_spec(ell, l1, l2))
            sizes = demazure_sizes(ell, l2)
            q, m = len(sizes), sizes[-1]
            p = f"ell={ell},({l1},{l2})"
            yield _case("demazure", "dim", p, 4**q * ell ** (q - 1) * m, G.dim)
            yield _case("demazure", "character", p, True, G.character() == demazure_char_formula(ell, l1, l2))
            if ell == 1:
                yield _case("demazure", "equals Weyl character", p, True, G.character() == weyl_char_formula(l1, l2))
            if ell <= 2 and l2 <= 4:
                yield _case("demazure", "relations", p, True, check_demazure(G, ell, (l1, l2)).ok)
                yield _case("demazure", "lowest weight", p, True, check_demazure_lowest_weight(G, ell, (l1, l2)).ok)


def suite_truncated(max_l2: int = 4, l1=Fraction(1), **_) -> Iterator[Case]:
    for N in range(1, 5):
        for l2 in range(1, max_l2 + 1):
            G = fuse(truncated_spec(N, l1, l2))
            p = f"N={N},({l1},{l2})"
            yield _case("truncated", "relations", p, True, check_truncated(G, N, (l1, l2)).ok)
            if N < l2:
                q, m = divmod(l2, N)
                yield _case("truncated", "dim", p, 4**N * q ** (N - m) * (q + 1) ** m, G.dim)
                yield _case("truncated", "character", p, True, G.character() == truncated_char_formula(N, l1, l2))
            else:
                yield _case("truncated", "equals Weyl", p, (4**l2, True), (G.dim, G.character() == weyl_char_formula(l1, l2)))


SUITES: Dict[str, Callable[..., Iterator[Case]]] = {
    "algebra": suite_algebra,
    "comm": suite_comm,
    "kac": suite_kac,
    "weyl": suite_weyl,
    "cv": suite_cv,
    "combinatorics": suite_combinatorics,
    "demazure": suite_demazure,
    "truncated": suite_truncated,
}


def run(names, max_l2: int = 3, max_n: int = 8) -> List[Case]:
    if "all" in names:
        names = list(SUITES)
    out: List[Case] = []
    for name in names:
        kwargs = {"max_l2": max_l2, "max_n": max_n}
        if name == "cv":
            kwargs["max_n"] = max_l2
        out.extend(SUITES[name](**kwargs))
    return out
