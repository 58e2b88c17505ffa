"""Partition bookkeeping behind the basis and dimension counts.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the partition of 0.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, combinations_with_replacement, product
from math import prod
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from .pbw import Element, divided_power

Partition = Tuple[int, ...]


def partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple (zero parts dropped)."""
    out = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts!r}")
    return out


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def phi(xi: Partition, c: int) -> Partition:
    """Remove one box from the last row of the block of equal rows starting at ``c``."""
    if not 0 <= c < len(xi):
        raise ValueError(f"index {c} out of range for {xi}")
    last = c
    while last + 1 < len(xi) and xi[last + 1] == xi[c]:
        last += 1
    out = list(xi)
    out[last] -= 1
    return tuple(p for p in out if p)


def apply_phis(xi: Partition, indices: Sequence[int]) -> Partition:
    """phi_{i_1} o ... o phi_{i_k} (xi): the rightmost index acts first."""
    for c in reversed(indices):
        xi = phi(xi, c)
    return xi


def index_sets(xi: Partition) -> Iterator[Tuple[int, ...]]:
    """The strictly increasing index tuples into ``xi``, ordered by length then lexicographically."""
    for k in range(len(xi) + 1):
        yield from combinations(range(len(xi)), k)


class IndexPair(NamedTuple):
    b: Tuple[int, ...]
    c: Tuple[int, ...]
    result: Partition


def enumerate_I(xi: Partition) -> List[IndexPair]:
    out = []
    for c in index_sets(xi):
        mid = apply_phis(xi, c)
        for b in index_sets(mid):
            out.append(IndexPair(b, c, apply_phis(mid, b)))
    return out


def dim_identity_sides(xi: Partition) -> Tuple[int, int]:
    """Sum over I(xi) of products of sl(2) dimensions, and the product of 4 xi_j."""
    left = sum(prod(p + 1 for p in pair.result) for pair in enumerate_I(xi))
    return left, prod(4 * p for p in xi)


def dim_identity_check(xi: Partition) -> bool:
    left, right = dim_identity_sides(xi)
    return left == right


def split(xi: Partition, t: int) -> Tuple[Partition, Partition]:
    return xi[:t], xi[t:]


def decomposition_check(xi: Partition, t: int) -> bool:
    """Check that I(xi) is assembled from I of the two halves split at ``t``.

    Requires ``xi[t-1] > xi[t]``.  Pairs are compared as multisets, together
    with the partition each pair produces; the two halves of that partition
    are merged by sorting, since two boxes removed from the head can leave it
    shorter than the tail.
    """
    if not (1 <= t < len(xi)) or xi[t - 1] <= xi[t]:
        raise ValueError(f"split point {t} is not a strict descent of {xi}")
    head, tail = split(xi, t)
    built = Counter()
    for c in index_sets(head):
        ch = apply_phis(head, c)
        for z in index_sets(tail):
            zt = apply_phis(tail, z)
            cz = c + tuple(i + t for i in z)
            for b in index_sets(ch):
                bh = apply_phis(ch, b)
                for u in index_sets(zt):
                    bu = b + tuple(i + t for i in u)
                    built[(bu, cz, tuple(sorted(bh + apply_phis(zt, u), reverse=True)))] += 1
    direct = Counter((p.b, p.c, p.result) for p in enumerate_I(xi))
    return built == direct


def descents(xi: Partition) -> List[int]:
    return [t for t in range(1, len(xi)) if xi[t - 1] > xi[t]]


# -- monomial descriptors ----------------------------------------------------------------


class WeylMonomial(NamedTuple):
    """y2(a_1)...y2(a_j) x1(b_1)...x1(b_k) y3(c_1)...y3(c_l)."""

    a: Tuple[int, ...]
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def element(self) -> Element:
        letters = [("y2", i) for i in self.a] + [("x1", i) for i in self.b] + [("y3", i) for i in self.c]
        return Element.word(letters)


def weyl_monomial_pool(l2: int) -> List[WeylMonomial]:
    if l2 < 0:
        raise ValueError("l2 must be nonnegative")
    out = []
    for nc in range(l2 + 1):
        for c in combinations(range(l2), nc):
            for nb in range(l2 - nc + 1):
                for b in combinations(range(l2 - nc), nb):
                    for j in range(l2 - nc - nb + 1):
                        top = l2 - nc - nb - j
                        for a in combinations_with_replacement(range(top + 1), j):
                            out.append(WeylMonomial(a, b, c))
    return out


class CVMonomial(NamedTuple):
    """y2(0)^(i_1) ... y2(e-1)^(i_e) x1(b_1)...x1(b_k) y3(c_1)...y3(c_l)."""

    i: Tuple[int, ...]
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def element(self) -> Element:
        out = Element.one()
        for deg, p in enumerate(self.i):
            if p:
                out = out * divided_power("y2", deg, p)
        return out * Element.word([("x1", j) for j in self.b] + [("y3", j) for j in self.c])


def sl2_exponents(beta: Partition) -> List[Tuple[int, ...]]:
    """Exponent tuples (i_1, ..., i_e) allowed by the sl(2) Chari-Venkatesh basis of ``beta``.

    The constraint for (q, p) with 2 <= q <= e+1 and 1 <= p <= q-1 reads
    p i_{q-1} + (p+1) i_q + 2 (i_{q+1} + ... + i_e) <= beta_{q-p} + ... + beta_e,
    with i and beta indexed from 1 and absent entries read as 0.
    """
    e = len(beta)
    b = (0,) + tuple(beta) + (0,)
    bound = sum(beta)
    out = []
    for i in product(range(bound + 1), repeat=e):
        ii = (0,) + i + (0,)
        ok = True
        for q in range(2, e + 2):
            tail = 2 * sum(ii[q + 1 : e + 1])
            for p in range(1, q):
                if p * ii[q - 1] + (p + 1) * ii[q] + tail > sum(b[q - p : e + 1]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(i)
    return out


def cv_basis_index_set(xi: Partition) -> List[CVMonomial]:
    out = []
    for pair in enumerate_I(xi):
        for i in sl2_exponents(pair.result):
            out.append(CVMonomial(i, pair.b, pair.c))
    return out
