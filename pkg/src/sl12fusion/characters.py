"""Formal characters as integer combinations of exponentials e^{(a, b)}.

Exponents are (h1, h2) weights with rational entries.  Intermediate results
may carry negative coefficients (numerators of the quotient formulas); a
character coming from a module has positive ones.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exp = Tuple[Fraction, Fraction]


def _exp(a, b) -> Exp:
    return (Fraction(a), Fraction(b))


class FormalCharacter:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple, int] | Iterable[Tuple[Tuple, int]] = ()):
        acc: Dict[Exp, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), m in items:
            k = _exp(a, b)
            acc[k] = acc.get(k, 0) + int(m)
        self.terms = {k: m for k, m in acc.items() if m}

    @classmethod
    def e(cls, a, b) -> "FormalCharacter":
        return cls({(a, b): 1})

    @classmethod
    def of_weights(cls, weights: Iterable[Tuple]) -> "FormalCharacter":
        out: Dict[Exp, int] = {}
        for w in weights:
            k = _exp(*w)
            out[k] = out.get(k, 0) + 1
        return cls(out)

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self.terms.values())

    def __getitem__(self, key) -> int:
        return self.terms.get(_exp(*key), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = dict(self.terms)
        for k, m in other.terms.items():
            out[k] = out.get(k, 0) + m
        return FormalCharacter(out)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter({k: -m for k, m in self.terms.items()})

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        if isinstance(other, int):
            return FormalCharacter({k: m * other for k, m in self.terms.items()})
        out: Dict[Exp, int] = {}
        for (a1, b1), m1 in self.terms.items():
            for (a2, b2), m2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + m1 * m2
        return FormalCharacter(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FormalCharacter":
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def divide_root_difference(self, times: int = 1) -> "FormalCharacter":
        """Exact quotient by (u - u^{-1})^times with u = e^{(1/2, 1)}; raises on a nonzero remainder.

        u is the exponential of half the root of y2, so each string
        h1 - h2/2 = const is a Laurent polynomial in u and divides on its own.
        """
        out = self
        for _ in range(times):
            out = out._divide_once()
        return out

    def _divide_once(self) -> "FormalCharacter":
        strings: Dict[Fraction, Dict[Fraction, int]] = {}
        for (a, b), m in self.terms.items():
            strings.setdefault(a - b / 2, {})[b] = m
        quotient: Dict[Exp, int] = {}
        for key, poly in strings.items():
            poly = dict(poly)
            while poly:
                top = max(poly)
                c = poly.pop(top)
                if not poly or top - 2 < min(poly):
                    raise ArithmeticError(f"nonzero remainder dividing by u - 1/u on the string h1 - h2/2 = {key}")
                b = top - 1
                quotient[(key + b / 2, b)] = c
                low = top - 2
                poly[low] = poly.get(low, 0) + c
                if not poly[low]:
                    del poly[low]
        return FormalCharacter(quotient)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def to_records(self):
        return [{"h1": str(a), "h2": str(b), "mult": m} for (a, b), m in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), sort_keys=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}e^({a},{b})" for (a, b), m in self.sorted_terms())


ONE = FormalCharacter({(0, 0): 1})
EXTERIOR = FormalCharacter({(0, 0): 1, (0, 1): 1, (-1, -1): 1, (-1, 0): 1})
"""Character of the exterior algebra on the odd lowering part, shifted to start at (0, 0)."""


class GradedCharacter:
    """Multiplicities keyed by (h1, h2, t-degree)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple, int]):
        self.terms = {(Fraction(a), Fraction(b), int(d)): int(m) for (a, b, d), m in terms.items() if m}

    def ungraded(self) -> FormalCharacter:
        out: Dict[Exp, int] = {}
        for (a, b, _), m in self.terms.items():
            out[(a, b)] = out.get((a, b), 0) + m
        return FormalCharacter(out)

    def degree_slice(self, d: int) -> FormalCharacter:
        return FormalCharacter({(a, b): m for (a, b, k), m in self.terms.items() if k == d})

    @property
    def graded_dims(self) -> Tuple[int, ...]:
        if not self.terms:
            return ()
        top = max(d for _, _, d in self.terms)
        dims = [0] * (top + 1)
        for (_, _, d), m in self.terms.items():
            dims[d] += m
        return tuple(dims)

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedCharacter) and self.terms == other.terms

    def to_records(self):
        keys = sorted(self.terms, key=lambda k: (k[2], -k[0], -k[1]))
        return [{"h1": str(a), "h2": str(b), "deg": d, "mult": self.terms[(a, b, d)]} for a, b, d in keys]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), sort_keys=True)

    def __repr__(self) -> str:
        return f"GradedCharacter(graded_dims={list(self.graded_dims)})"


def char_of(mod) -> FormalCharacter:
    """Character of a module (anything with a ``weights`` sequence, or a cyclic wrapper)."""
    mod = getattr(mod, "module", mod)
    return FormalCharacter.of_weights(mod.weights)


def _difference(p: int) -> FormalCharacter:
    """u^p - u^{-p} with u = e^{(1/2, 1)}."""
    h = Fraction(p, 2)
    return FormalCharacter({(h, p): 1, (-h, -p): -1})


def gl2_char(m1, m2: int) -> FormalCharacter:
    """Character of the irreducible g0-module of highest weight (m1, m2)."""
    return FormalCharacter({(Fraction(m1) - i, m2 - 2 * i): 1 for i in range(m2 + 1)})


def _quotient_form(l1, counts: Sequence[Tuple[int, int]]) -> FormalCharacter:
    """e^{(l1 - (n - k)/2, 0)} EXTERIOR^k prod (u^p - u^-p)^c / (u - u^-1)^k.

    ``counts`` lists (size p, multiplicity c); k = sum c and n = sum p c.
    The prefactor puts the top weight at (l1, n).
    """
    k = sum(c for _, c in counts)
    n = sum(p * c for p, c in counts)
    num = FormalCharacter.e(Fraction(l1) - Fraction(n - k, 2), 0) * EXTERIOR ** k
    for p, c in counts:
        if p < 1:
            raise ValueError("factor sizes must be positive")
        num = num * _difference(p) ** c
    return num.divide_root_difference(k)


def fusion_char_formula(l1, sizes: Sequence[int]) -> FormalCharacter:
    """Character of a fusion product of Kac modules of the given sizes, total h1-weight l1."""
    return _quotient_form(l1, [(p, 1) for p in sizes])


def weyl_char_formula(l1, l2: int) -> FormalCharacter:
    if l2 < 0:
        raise ValueError("l2 must be nonnegative")
    return FormalCharacter.e(l1, 0) * EXTERIOR ** l2


def cv_char_formula(l1, xi: Sequence[int]) -> FormalCharacter:
    return _quotient_form(l1, [(p, 1) for p in xi])


def demazure_sizes(ell: int, l2: int) -> Tuple[int, ...]:
    """Factor sizes (ell, ..., ell, m) with l2 = (q-1) ell + m and 0 < m <= ell."""
    if ell < 1 or l2 < 0:
        raise ValueError("need ell >= 1 and l2 >= 0")
    if l2 == 0:
        return ()
    q, m = divmod(l2, ell)
    if m == 0:
        q, m = q - 1, ell
    return (ell,) * q + (m,)


def truncated_sizes(N: int, l2: int) -> Tuple[int, ...]:
    """Factor sizes (q+1)^m q^(N-m) with l2 = qN + m and 0 <= m < N; all ones when N >= l2."""
    if N < 1 or l2 < 0:
        raise ValueError("need N >= 1 and l2 >= 0")
    if N >= l2:
        return (1,) * l2
    q, m = divmod(l2, N)
    return (q + 1,) * m + (q,) * (N - m)


def demazure_char_formula(ell: int, l1, l2: int) -> FormalCharacter:
    sizes = demazure_sizes(ell, l2)
    if not sizes:
        return FormalCharacter.e(l1, 0)
    q = len(sizes)
    return _quotient_form(l1, [(ell, q - 1), (sizes[-1], 1)])


def truncated_char_formula(N: int, l1, l2: int) -> FormalCharacter:
    if N >= l2:
        raise ValueError("the closed form holds for N < l2; W(lambda, N) is W(lambda) otherwise")
    q, m = divmod(l2, N)
    return _quotient_form(l1, [(q, N - m), (q + 1, m)])
