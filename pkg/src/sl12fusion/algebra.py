"""The Lie superalgebra sl(1|2) in its 3x3 supermatrix realization.

Row/column 1 carries the odd grading, rows/columns 2 and 3 are even.
The basis is ``x1=E12, x2=E23, x3=E13``, ``y_i`` the transposes, and the
Cartan elements ``h1=E11+E22``, ``h2=E22-E33``.  ``h3 = h1 - h2`` is a
derived combination and is never a basis element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

Combination = Dict[str, Fraction]
Weight = Tuple[Fraction, Fraction]

# Canonical generator order; lowering operators first.
BASIS: Tuple[str, ...] = ("y1", "y2", "y3", "x1", "x2", "x3", "h1", "h2")
ODD = frozenset({"x1", "x3", "y1", "y3"})
CARTAN = ("h1", "h2")

_POSITIONS = {"x1": (0, 1), "x2": (1, 2), "x3": (0, 2)}


def parity(name: str) -> int:
    if name not in BASIS:
        raise KeyError(name)
    return 1 if name in ODD else 0


@lru_cache(maxsize=None)
def matrix(name: str) -> Tuple[Tuple[Fraction, ...], ...]:
    m = [[Fraction(0)] * 3 for _ in range(3)]
    if name in _POSITIONS:
        i, j = _POSITIONS[name]
        m[i][j] = Fraction(1)
    elif name[0] == "y" and "x" + name[1] in _POSITIONS:
        j, i = _POSITIONS["x" + name[1]]
        m[i][j] = Fraction(1)
    elif name == "h1":
        m[0][0] = m[1][1] = Fraction(1)
    elif name == "h2":
        m[1][1], m[2][2] = Fraction(1), Fraction(-1)
    else:
        raise KeyError(name)
    return tuple(tuple(r) for r in m)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def supercommutator(a, b, pa: int, pb: int):
    """``AB - (-1)^{pa pb} BA`` for 3x3 matrices."""
    ab, ba = _matmul(a, b), _matmul(b, a)
    sign = -1 if pa * pb else 1
    return [[ab[i][j] - sign * ba[i][j] for j in range(3)] for i in range(3)]


def decompose(m) -> Combination:
    """Coordinates of a supertraceless 3x3 matrix in ``BASIS``."""
    if m[0][0] != m[1][1] + m[2][2]:
        raise ValueError("matrix is not supertraceless")
    out: Combination = {}
    for name, (i, j) in _POSITIONS.items():
        if m[i][j]:
            out[name] = Fraction(m[i][j])
        if m[j][i]:
            out["y" + name[1]] = Fraction(m[j][i])
    # diag(q + r, q, r) = (q + r) h1 - r h2
    if m[0][0]:
        out["h1"] = Fraction(m[0][0])
    if m[2][2]:
        out["h2"] = Fraction(-m[2][2])
    return out


def to_matrix(comb: Combination):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for name, c in comb.items():
        e = matrix(name)
        for i in range(3):
            for j in range(3):
                m[i][j] += c * e[i][j]
    return m


@lru_cache(maxsize=None)
def _bracket(a: str, b: str) -> Tuple[Tuple[str, Fraction], ...]:
    m = supercommutator(matrix(a), matrix(b), parity(a), parity(b))
    comb = decompose(m)
    return tuple((k, comb[k]) for k in BASIS if k in comb)


def bracket(a: str, b: str) -> Combination:
    return dict(_bracket(a, b))


def bracket_combination(u: Combination, v: Combination) -> Combination:
    """Bilinear extension of ``bracket`` to combinations."""
    out: Combination = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for k, c in _bracket(a, b):
                out[k] = out.get(k, Fraction(0)) + ca * cb * c
    return {k: c for k, c in out.items() if c}


def bracket_table() -> Dict[Tuple[str, str], Combination]:
    return {(a, b): bracket(a, b) for a in BASIS for b in BASIS}


def jacobi_defects() -> List[Tuple[str, str, str]]:
    """Triples violating [a, [b, c]] = [[a, b], c] + (-1)^{|a||b|} [b, [a, c]]."""
    bad = []
    for a in BASIS:
        for b in BASIS:
            sign = -1 if parity(a) and parity(b) else 1
            for c in BASIS:
                lhs = bracket_combination({a: Fraction(1)}, bracket(b, c))
                r1 = bracket_combination(bracket(a, b), {c: Fraction(1)})
                r2 = bracket_combination({b: Fraction(1)}, bracket(a, c))
                rhs = dict(r1)
                for k, x in r2.items():
                    rhs[k] = rhs.get(k, Fraction(0)) + sign * x
                if lhs != {k: x for k, x in rhs.items() if x}:
                    bad.append((a, b, c))
    return bad


def table_json() -> str:
    """Structure constants as canonical JSON for golden tests."""
    rows = []
    for a in BASIS:
        for b in BASIS:
            rows.append({
                "left": a,
                "right": b,
                "bracket": {k: str(c) for k, c in bracket(a, b).items()},
            })
    payload = {
        "generators": [{"id": g, "parity": "odd" if parity(g) else "even"} for g in BASIS],
        "brackets": rows,
    }
    return json.dumps(payload, sort_keys=True, indent=1)


# -- roots and Borel subalgebras ------------------------------------------------

@dataclass(frozen=True, order=True)
class Root:
    """A root recorded by its values on (h1, h2)."""

    h1: Fraction
    h2: Fraction

    def __neg__(self) -> "Root":
        return Root(-self.h1, -self.h2)

    def __add__(self, other: "Root") -> "Root":
        return Root(self.h1 + other.h1, self.h2 + other.h2)

    def __sub__(self, other: "Root") -> "Root":
        return self + (-other)

    def __call__(self, coroot: Combination) -> Fraction:
        return self.h1 * coroot.get("h1", 0) + self.h2 * coroot.get("h2", 0)

    @property
    def name(self) -> str:
        return _ROOT_NAMES[self]

    @property
    def vector(self) -> str:
        """The basis element spanning this root space."""
        return _ROOT_VECTORS[self]

    @property
    def odd(self) -> bool:
        return parity(self.vector) == 1

    def __repr__(self) -> str:
        return self.name


def _root_of(name: str) -> Root:
    vals = []
    for h in CARTAN:
        comb = bracket(h, name)
        vals.append(comb.get(name, Fraction(0)))
    return Root(*vals)


ALPHA1 = _root_of("x1")
ALPHA2 = _root_of("x2")
ALPHA3 = _root_of("x3")

_ROOT_VECTORS = {}
_ROOT_NAMES = {}
for _i, _r in ((1, ALPHA1), (2, ALPHA2), (3, ALPHA3)):
    _ROOT_VECTORS[_r] = f"x{_i}"
    _ROOT_VECTORS[-_r] = f"y{_i}"
    _ROOT_NAMES[_r] = f"a{_i}"
    _ROOT_NAMES[-_r] = f"-a{_i}"
ROOTS = tuple(sorted(_ROOT_VECTORS))


def coroot(alpha: Root) -> Combination:
    """``h_alpha = [e_alpha, e_-alpha]``."""
    return bracket(alpha.vector, (-alpha).vector)


SIMPLE_ROOTS = {
    1: frozenset({ALPHA1, ALPHA2}),
    2: frozenset({-ALPHA1, ALPHA3}),
    3: frozenset({ALPHA2, -ALPHA3}),
}


def positive_roots(simple: Iterable[Root]) -> frozenset:
    """Roots that are nonnegative integer combinations of ``simple``."""
    simple = list(simple)
    a, b = simple
    out = set()
    for r in ROOTS:
        # solve r = p a + q b over Q
        det = a.h1 * b.h2 - a.h2 * b.h1
        p = (r.h1 * b.h2 - r.h2 * b.h1) / det
        q = (a.h1 * r.h2 - a.h2 * r.h1) / det
        if p >= 0 and q >= 0 and p.denominator == 1 and q.denominator == 1:
            out.add(r)
    return frozenset(out)


def raising_generators(borel: int) -> Tuple[str, ...]:
    pos = positive_roots(SIMPLE_ROOTS[borel])
    return tuple(g for g in BASIS if g not in CARTAN and _root_of(g) in pos)


def lowering_generators(borel: int) -> Tuple[str, ...]:
    pos = positive_roots(SIMPLE_ROOTS[borel])
    return tuple(g for g in BASIS if g not in CARTAN and _root_of(g) not in pos)


def root_of(name: str) -> Root:
    return _root_of(name)


def odd_reflection(simple: Iterable[Root], alpha: Root) -> frozenset:
    simple = frozenset(simple)
    if alpha not in simple:
        raise ValueError(f"{alpha!r} is not a simple root of {sorted(simple)}")
    if not alpha.odd:
        raise ValueError(f"{alpha!r} is even")
    h_alpha = coroot(alpha)
    out = set()
    for beta in simple:
        if beta == alpha:
            out.add(-alpha)
        elif beta(h_alpha) == 0 and alpha(coroot(beta)) == 0:
            out.add(beta)
        else:
            out.add(beta + alpha)
    return frozenset(out)


# -- weights --------------------------------------------------------------------

def weight(l1, l2) -> Weight:
    return (Fraction(l1), Fraction(l2))


def in_dominant_b2(lam: Weight) -> bool:
    l1, l2 = map(Fraction, lam)
    if l1 == 0 and l2 == 0:
        return True
    return l2.denominator == 1 and l2 >= 1


def is_typical(lam: Weight) -> bool:
    """Typicality for the Borel b(2): ``l1 != 0`` and ``l1 - l2 != 0``."""
    if not in_dominant_b2(lam):
        raise ValueError(f"{lam} is not dominant for b(2)")
    l1, l2 = map(Fraction, lam)
    return l1 != 0 and l1 - l2 != 0


def evaluate(lam: Weight, h: Combination) -> Fraction:
    """``lam(h)`` for a Cartan combination ``h``."""
    return Fraction(lam[0]) * h.get("h1", 0) + Fraction(lam[1]) * h.get("h2", 0)
