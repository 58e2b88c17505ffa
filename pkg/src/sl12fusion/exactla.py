"""Exact linear algebra over Q.

Dense matrices are lists of rows of ``Fraction``.  ``SparseMatrix`` stores
columns as ``{row: value}`` dicts and is what module actions use.
``BlockSubspace`` tracks a subspace spanned by vectors that each live in
one block of a fixed direct-sum decomposition (weight spaces, in practice)
and does its elimination over Z through :mod:`sl12fusion.kernel`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .kernel import Echelon

Vector = Dict[int, Fraction]
Dense = List[List[Fraction]]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def as_matrix(rows: Iterable[Iterable]) -> Dense:
    return [[_frac(x) for x in row] for row in rows]


def rref(m: Sequence[Sequence], cols: Optional[int] = None) -> Tuple[Dense, int]:
    """Reduced row echelon form and rank.

    Pivots are the first nonzero column, taking the smallest row index;
    zero rows are returned at the bottom so the shape is preserved.
    """
    a = as_matrix(m)
    nrows = len(a)
    ncols = cols if cols is not None else (len(a[0]) if a else 0)
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        row = [x * inv for x in a[r]]
        a[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    ai = a[i]
                    for j in nz:
                        ai[j] -= f * row[j]
        r += 1
        if r == nrows:
            break
    return a, r


def rank(m: Sequence[Sequence]) -> int:
    return rref(m)[1]


def pivot_columns(reduced: Dense) -> List[int]:
    out = []
    for row in reduced:
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None:
            break
        out.append(p)
    return out


class Subspace:
    """A subspace of Q^n held as a canonical rref basis."""

    def __init__(self, ambient: int, rows: Iterable[Iterable] = ()):
        rows = [list(r) for r in rows]
        if rows:
            red, rk = rref(rows, ambient)
            self.basis: Dense = red[:rk]
        else:
            self.basis = []
        self.ambient = ambient
        self._pivots = pivot_columns(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.ambient == other.ambient and self.basis == other.basis

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"

    def reduce(self, v: Sequence) -> List[Fraction]:
        w = [_frac(x) for x in v]
        for row, p in zip(self.basis, self._pivots):
            f = w[p]
            if f:
                for j in range(p, self.ambient):
                    if row[j]:
                        w[j] -= f * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> List[Fraction]:
        """Coefficients of ``v`` in the rref basis; raises if ``v`` is outside."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return [_frac(v[p]) for p in self._pivots]

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis + other.basis)

    def quotient_basis(self, sub: "Subspace") -> Dense:
        """Rows of this rref basis whose pivots are new relative to ``sub``.

        Their classes form a basis of ``self / sub`` (``sub`` must be contained
        in ``self``).
        """
        old = set(sub._pivots)
        return [row for row, p in zip(self.basis, self._pivots) if p not in old]


def nullspace(m: Sequence[Sequence], cols: Optional[int] = None) -> Subspace:
    ncols = cols if cols is not None else (len(m[0]) if m else 0)
    if not m:
        return Subspace(ncols, [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)])
    red, rk = rref(m, ncols)
    piv = pivot_columns(red[:rk])
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return Subspace(ncols, basis)


def matvec_dense(m: Sequence[Sequence], v: Sequence) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def closure(v: Sequence, ops: Sequence[Sequence[Sequence]]) -> Subspace:
    """Smallest subspace containing ``v`` and stable under every operator."""
    n = len(v)
    space = Subspace(n)
    frontier = [list(map(_frac, v))]
    while frontier:
        new = []
        for w in frontier:
            if not space.contains(w):
                space = Subspace(n, space.basis + [w])
                new.append(w)
        frontier = [matvec_dense(op, w) for w in new for op in ops]
    return space


class SparseMatrix:
    """Column-sparse rational matrix."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[List[Dict[int, Fraction]]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [dict() for _ in range(ncols)]

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{j: Fraction(1)} for j in range(n)])

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{i: _frac(rows[i][j]) for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    def to_dense(self) -> Dense:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                out[i][j] = x
        return out

    def triplets(self) -> List[Tuple[int, int, Fraction]]:
        return sorted((i, j, x) for j, col in enumerate(self.cols) for i, x in col.items())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseMatrix)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.cols == other.cols
        )

    def is_zero(self) -> bool:
        return not any(self.cols)

    def apply(self, v: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        cols = self.cols
        for j, c in v.items():
            for i, a in cols[j].items():
                out[i] = out.get(i, 0) + a * c
        return {i: x for i, x in out.items() if x}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(col) for col in other.cols])

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.combine(other, 1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.combine(other, -1)

    def combine(self, other: "SparseMatrix", coeff) -> "SparseMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, x in b.items():
                c[i] = c.get(i, 0) + coeff * x
            cols.append({i: x for i, x in c.items() if x})
        return SparseMatrix(self.nrows, self.ncols, cols)

    def scale(self, c) -> "SparseMatrix":
        c = _frac(c)
        if not c:
            return SparseMatrix(self.nrows, self.ncols)
        return SparseMatrix(self.nrows, self.ncols, [{i: c * x for i, x in col.items()} for col in self.cols])

    def kron_slot(self, left: int, right: int, signs: Sequence[int]) -> "SparseMatrix":
        """``I_left (x) self (x) I_right`` with a sign per left basis index."""
        n = self.nrows
        m = self.ncols
        cols = []
        for a in range(left):
            s = signs[a]
            for j in range(m):
                col = self.cols[j]
                for b in range(right):
                    cols.append({(a * n + i) * right + b: s * x for i, x in col.items()})
        return SparseMatrix(left * n * right, left * m * right, cols)


def integer_scaled(v: Mapping[int, Fraction]) -> Dict[int, int]:
    """``v`` times the lcm of its denominators (a positive rescaling)."""
    d = 1
    for x in v.values():
        if isinstance(x, Fraction):
            d = lcm(d, x.denominator)
    return {i: int(x * d) for i, x in v.items() if x}


class BlockSubspace:
    """Subspace spanned by block-homogeneous vectors, eliminated over Z.

    ``block_of[i]`` names the block of coordinate ``i`` and ``position[i]``
    its index inside the block.  Insertion order is recorded per block so
    that ``contains(v, upto=k)`` tests membership in the span of the vectors
    accepted before the k-th checkpoint.
    """

    def __init__(self, block_of: Sequence[Hashable], position: Sequence[int], sizes: Mapping[Hashable, int]):
        self.block_of = block_of
        self.position = position
        self.sizes = dict(sizes)
        ids: Dict[Hashable, int] = {}
        self._bid = [ids.setdefault(k, len(ids)) for k in block_of]
        self._keys = [None] * len(ids)
        for k, b in ids.items():
            self._keys[b] = k
        self.echelons: Dict[Hashable, Echelon] = {}
        self.marks: List[Dict[Hashable, int]] = []
        self.dim = 0

    def _echelon(self, key) -> Echelon:
        e = self.echelons.get(key)
        if e is None:
            e = self.echelons[key] = Echelon(self.sizes[key])
        return e

    def split(self, v: Mapping[int, Fraction]) -> Dict[Hashable, List[int]]:
        """Blockwise dense integer pieces of ``v`` (each rescaled separately)."""
        parts: Dict[int, Dict[int, Fraction]] = {}
        bid = self._bid
        for i, x in v.items():
            if x:
                parts.setdefault(bid[i], {})[i] = x
        out = {}
        pos = self.position
        for b, piece in parts.items():
            key = self._keys[b]
            dense = [0] * self.sizes[key]
            if not all(type(x) is int for x in piece.values()):
                piece = integer_scaled(piece)
            for i, x in piece.items():
                dense[pos[i]] = x
            out[key] = dense
        return out

    def add(self, v: Mapping[int, Fraction]) -> bool:
        parts = self.split(v)
        if len(parts) > 1:
            raise ValueError("vector is not block-homogeneous")
        if not parts:
            return False
        (key, dense), = parts.items()
        if self._echelon(key).add(dense):
            self.dim += 1
            return True
        return False

    def checkpoint(self) -> int:
        """Record the current span; returns the checkpoint index."""
        self.marks.append({k: len(e) for k, e in self.echelons.items()})
        return len(self.marks) - 1

    def contains(self, v: Mapping[int, Fraction], upto: Optional[int] = None) -> bool:
        for key, dense in self.split(v).items():
            e = self.echelons.get(key)
            if e is None:
                return False
            limit = -1 if upto is None else self.marks[upto].get(key, 0)
            if limit == 0:
                return False
            if not e.contains(dense, limit):
                return False
        return True

    def block_dim(self, key, upto: Optional[int] = None) -> int:
        e = self.echelons.get(key)
        if e is None:
            return 0
        return len(e) if upto is None else self.marks[upto].get(key, 0)
