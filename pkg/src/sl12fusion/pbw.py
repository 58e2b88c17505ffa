"""Normal ordering in U(sl(1|2)[t]).

Words are tuples of :class:`Gen` letters.  ``normal_form`` sorts every word
into nondecreasing order for a chosen total order using

    g(a) h(b) = (-1)^{|g||h|} h(b) g(a) + [g, h](a + b),
    x(a) x(a) = 1/2 [x, x](2a)               (x odd),

which terminates because each rewrite either shortens the word or removes an
inversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _product
from math import factorial
from typing import Dict, Iterable, Iterator, NamedTuple, Sequence, Tuple

from . import algebra

Word = Tuple["Gen", ...]


class Gen(NamedTuple):
    """The current generator ``name (x) t^degree``."""

    name: str
    degree: int = 0

    @property
    def parity(self) -> int:
        return algebra.parity(self.name)

    def __repr__(self) -> str:
        return f"{self.name}({self.degree})"


def word_parity(word: Iterable[Gen]) -> int:
    return sum(g.parity for g in word) % 2


class Element:
    """A finite rational combination of words, zero terms dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: Dict[Word, Fraction] = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    w = tuple(w)
                    clean[w] = clean.get(w, Fraction(0)) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def one(cls) -> "Element":
        return cls({(): 1})

    @classmethod
    def gen(cls, name: str, degree: int = 0) -> "Element":
        if name == "h3":
            return cls({(Gen("h1", degree),): 1, (Gen("h2", degree),): -1})
        return cls({(Gen(name, degree),): 1})

    @classmethod
    def word(cls, letters: Iterable, coeff=1) -> "Element":
        return cls({tuple(Gen(*g) if not isinstance(g, Gen) else g for g in letters): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return Element(out)

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            out: Dict[Word, Fraction] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, Fraction(0)) + c1 * c2
            return Element(out)
        c = Fraction(other)
        return Element({w: c * x for w, x in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, p: int) -> "Element":
        out = Element.one()
        for _ in range(p):
            out = out * self
        return out

    def degree_parts(self) -> Dict[int, "Element"]:
        """Split by total t-degree."""
        parts: Dict[int, Dict[Word, Fraction]] = {}
        for w, c in self.terms.items():
            parts.setdefault(sum(g.degree for g in w), {})[w] = c
        return {d: Element(t) for d, t in parts.items()}

    def parities(self) -> set:
        return {word_parity(w) for w in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            body = "*".join(map(repr, w)) or "1"
            parts.append(f"{c}*{body}" if c != 1 else body)
        return " + ".join(parts)


def divided_power(name: str, degree: int, p: int) -> Element:
    if p < 0:
        return Element()
    return Element({(Gen(name, degree),) * p: Fraction(1, factorial(p))})


# -- rewriting ----------------------------------------------------------------

class Order:
    """Total order on current generators.

    Letters compare by t-degree first (higher degree to the left by
    default, ``degree="asc"`` reverses that), then by position in ``names``.
    """

    def __init__(self, names: Sequence[str] = algebra.BASIS, degree: str = "desc"):
        if sorted(names) != sorted(algebra.BASIS):
            raise ValueError("order must list every basis element once")
        if degree not in ("asc", "desc"):
            raise ValueError("degree must be 'asc' or 'desc'")
        self.names = tuple(names)
        self.degree = degree
        self._rank = {n: i for i, n in enumerate(self.names)}
        self._sign = -1 if degree == "desc" else 1

    def key(self, g: Gen) -> Tuple[int, int]:
        return (self._sign * g.degree, self._rank[g.name])

    def __eq__(self, other):
        return isinstance(other, Order) and (self.names, self.degree) == (other.names, other.degree)

    def __hash__(self):
        return hash((self.names, self.degree))


DEFAULT_ORDER = Order()


def _bracket_letters(g: Gen, h: Gen) -> Tuple[Tuple[Gen, Fraction], ...]:
    d = g.degree + h.degree
    return tuple((Gen(k, d), c) for k, c in algebra.bracket(g.name, h.name).items())


@lru_cache(maxsize=None)
def _insert(word: Word, g: Gen, order: Order) -> Tuple[Tuple[Word, Fraction], ...]:
    """Normal form of ``word * g`` for a normal ``word``."""
    if not word:
        return (((g,), Fraction(1)),)
    last = word[-1]
    kl, kg = order.key(last), order.key(g)
    if kl < kg or (kl == kg and not g.parity):
        return ((word + (g,), Fraction(1)),)
    head = word[:-1]
    out: Dict[Word, Fraction] = {}

    def acc(terms, coeff):
        for w, c in terms:
            out[w] = out.get(w, Fraction(0)) + coeff * c

    if kl == kg:
        # equal odd letters: x x = 1/2 [x, x]
        for h, c in _bracket_letters(g, g):
            acc(_insert(head, h, order), c / 2)
    else:
        sign = -1 if last.parity and g.parity else 1
        for w, c in _insert(head, g, order):
            acc(_insert(w, last, order), sign * c)
        for h, c in _bracket_letters(last, g):
            acc(_insert(head, h, order), c)
    return tuple((w, c) for w, c in out.items() if c)


@lru_cache(maxsize=None)
def _normal_word(word: Word, order: Order) -> Tuple[Tuple[Word, Fraction], ...]:
    if len(word) <= 1:
        return ((word, Fraction(1)),)
    out: Dict[Word, Fraction] = {}
    for w, c in _normal_word(word[:-1], order):
        for w2, c2 in _insert(w, word[-1], order):
            out[w2] = out.get(w2, Fraction(0)) + c * c2
    return tuple((w, c) for w, c in out.items() if c)


def normal_form(e: Element, order: Order = DEFAULT_ORDER) -> Element:
    out: Dict[Word, Fraction] = {}
    for w, c in e.terms.items():
        for w2, c2 in _normal_word(w, order):
            out[w2] = out.get(w2, Fraction(0)) + c * c2
    return Element(out)


def is_normal(e: Element, order: Order = DEFAULT_ORDER) -> bool:
    for w in e.terms:
        for a, b in zip(w, w[1:]):
            ka, kb = order.key(a), order.key(b)
            if ka > kb or (ka == kb and a.parity):
                return False
    return True


# -- the elements y2(r, s) --------------------------------------------------------

def compositions(r: int, s: int) -> Iterator[Tuple[int, ...]]:
    """Tuples (b_0, ..., b_s) with sum r and sum(i * b_i) = s."""
    if r < 0 or s < 0:
        return

    def rec(i, left, weight, acc):
        if i > s:
            if left == 0 and weight == 0:
                yield tuple(acc)
            return
        for b in range(0, left + 1):
            if i * b > weight:
                break
            acc.append(b)
            yield from rec(i + 1, left - b, weight - i * b, acc)
            acc.pop()

    yield from rec(0, r, s, [])


def y2rs_element(r: int, s: int, start: int = 0) -> Element:
    """Sum over compositions of products of divided powers of ``y2(i)``.

    With ``start = k`` only the indices ``k..s`` may be used, which gives the
    restricted sums of the alternative CV presentation.
    """
    out = Element()
    if r < 0:
        return out
    for bs in compositions(r, s):
        if any(bs[:start]):
            continue
        term = Element.one()
        for i, b in enumerate(bs):
            if b:
                term = term * divided_power("y2", i, b)
        out = out + term
    return out


# -- the commutation identities -----------------------------------------------------

def _prod(letters: Iterable[Tuple[str, int]]) -> Element:
    return Element.word([Gen(n, d) for n, d in letters])


def _alpha(root: algebra.Root, h: str) -> Fraction:
    if h == "h3":
        return root.h1 - root.h2
    return getattr(root, h)


def _h(h: str, a: int) -> Element:
    return Element.gen(h, a)


def identity_sides(eq: str, **p) -> Tuple[Element, Element]:
    """Left and right sides of a named commutation identity."""
    A1, A3 = algebra.ALPHA1, algebra.ALPHA3
    if eq == "1":
        a, cs = p["a"], tuple(p["cs"])
        l = len(cs)
        lhs = _prod([("x2", a)]) * _prod(("y3", c) for c in cs)
        rhs = _prod(("y3", c) for c in cs) * _prod([("x2", a)])
        for j in range(1, l + 1):
            rest = [("y3", c) for i, c in enumerate(cs, 1) if i != j]
            rhs = rhs + (-1) ** (l - j) * _prod(rest + [("y1", cs[j - 1] + a)])
        return lhs, rhs
    if eq == "2":
        h, a, cs = p["h"], p["a"], tuple(p["cs"])
        l = len(cs)
        lhs = _h(h, a) * _prod(("y3", c) for c in cs)
        rhs = _prod(("y3", c) for c in cs) * _h(h, a)
        for j in range(1, l + 1):
            rest = [("y3", c) for i, c in enumerate(cs, 1) if i != j]
            rhs = rhs + _alpha(A3, h) * (-1) ** (l - j + 1) * _prod(rest + [("y3", cs[j - 1] + a)])
        return lhs, rhs
    if eq == "3":
        a, bs = p["a"], tuple(p["bs"])
        k = len(bs)
        lhs = _prod([("x2", a)]) * _prod(("x1", b) for b in bs)
        rhs = _prod(("x1", b) for b in bs) * _prod([("x2", a)])
        for j in range(1, k + 1):
            rest = [("x1", b) for i, b in enumerate(bs, 1) if i != j]
            rhs = rhs + (-1) ** (k - j + 1) * _prod(rest + [("x3", bs[j - 1] + a)])
        return lhs, rhs
    if eq == "4":
        h, a, bs = p["h"], p["a"], tuple(p["bs"])
        k = len(bs)
        lhs = _h(h, a) * _prod(("x1", b) for b in bs)
        rhs = _prod(("x1", b) for b in bs) * _h(h, a)
        for j in range(1, k + 1):
            rest = [("x1", b) for i, b in enumerate(bs, 1) if i != j]
            rhs = rhs + _alpha(A1, h) * (-1) ** (k - j) * _prod(rest + [("x1", bs[j - 1] + a)])
        return lhs, rhs
    if eq == "5":
        b, cs = p["b"], tuple(p["cs"])
        l = len(cs)
        lhs = _prod([("x3", b)]) * _prod(("y3", c) for c in cs)
        rhs = (-1) ** l * _prod(("y3", c) for c in cs) * _prod([("x3", b)])
        for j in range(1, l + 1):
            rest = _prod(("y3", c) for i, c in enumerate(cs, 1) if i != j)
            rhs = rhs + (-1) ** (j + 1) * rest * _h("h3", cs[j - 1] + b)
        return lhs, rhs
    if eq == "6":
        c, As = p["c"], tuple(p["as_"])
        lhs = _prod([("y1", c)]) * _prod(("y2", a) for a in As)
        rhs = _prod(("y2", a) for a in As) * _prod([("y1", c)])
        for i in range(len(As)):
            rest = [("y2", a) for q, a in enumerate(As) if q != i]
            rhs = rhs - _prod(rest + [("y3", As[i] + c)])
        return lhs, rhs
    if eq == "7":
        b, As = p["b"], tuple(p["as_"])
        lhs = _prod([("x3", b)]) * _prod(("y2", a) for a in As)
        rhs = _prod(("y2", a) for a in As) * _prod([("x3", b)])
        for i in range(len(As)):
            rest = [("y2", a) for q, a in enumerate(As) if q != i]
            rhs = rhs + _prod(rest + [("x1", As[i] + b)])
        return lhs, rhs
    if eq == "8":
        r, s, c = p["r"], p["s"], p["c"]
        lhs = _prod([("y1", c)]) * y2rs_element(r, s)
        rhs = y2rs_element(r, s) * _prod([("y1", c)])
        for q in range(s + 1):
            rhs = rhs - y2rs_element(r - 1, s - q) * _prod([("y3", c + q)])
        return lhs, rhs
    if eq == "9":
        r, s, b = p["r"], p["s"], p["b"]
        lhs = _prod([("x3", b)]) * y2rs_element(r, s)
        rhs = y2rs_element(r, s) * _prod([("x3", b)])
        for q in range(s + 1):
            rhs = rhs + y2rs_element(r - 1, s - q) * _prod([("x1", b + q)])
        return lhs, rhs
    raise ValueError(f"unknown identity {eq!r}")


IDENTITIES = ("1", "2", "3", "4", "5", "6", "7", "8", "9")


@dataclass(frozen=True)
class IdentityCheck:
    eq: str
    params: Tuple
    lhs: Element
    rhs: Element

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.ok


def verify_comm_identity(eq: str, order: Order = DEFAULT_ORDER, **params) -> IdentityCheck:
    lhs, rhs = identity_sides(eq, **params)
    return IdentityCheck(eq, tuple(sorted(params.items())), normal_form(lhs, order), normal_form(rhs, order))


def identity_instances(max_count: int = 3, max_degree: int = 3) -> Iterator[Tuple[str, dict]]:
    """Every parameter instance with factor counts and degrees bounded."""
    degs = range(max_degree + 1)

    def tuples():
        for n in range(max_count + 1):
            yield from _product(degs, repeat=n)

    for a in degs:
        for cs in tuples():
            yield "1", {"a": a, "cs": cs}
            for h in ("h1", "h2", "h3"):
                yield "2", {"h": h, "a": a, "cs": cs}
        for bs in tuples():
            yield "3", {"a": a, "bs": bs}
            for h in ("h1", "h2", "h3"):
                yield "4", {"h": h, "a": a, "bs": bs}
    for b in degs:
        for cs in tuples():
            yield "5", {"b": b, "cs": cs}
        for As in tuples():
            yield "6", {"c": b, "as_": As}
            yield "7", {"b": b, "as_": As}
    for r in degs:
        for s in degs:
            for c in degs:
                yield "8", {"r": r, "s": s, "c": c}
                yield "9", {"r": r, "s": s, "b": c}
