"""Degree filtrations of cyclic g[t]-modules and fusion products.

For a cyclic module with generator v, F(n) is spanned by U(g[t])[i] v for
i <= n.  Since g[t] is generated by g and the single element x3 (x) t,

    F(0) = U(g) v,    F(n) = F(n-1) + U(g) x3(1) C(n-1),

where C(n-1) is any complement of F(n-2) in F(n-1).  The filtration is
grown this way, one weight space at a time, with integer elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Weight
from .characters import FormalCharacter, GradedCharacter
from .exactla import SparseMatrix, Subspace, integer_scaled
from .modules import CHEVALLEY, CyclicModule, FiniteModule, evaluation, kac_b2, tensor, trivial_module

Vec = Dict[int, int]


class _IntOperator:
    """A module operator rescaled to integer entries (spans are unchanged)."""

    __slots__ = ("cols",)

    def __init__(self, m: SparseMatrix):
        d = 1
        for col in m.cols:
            for x in col.values():
                d = lcm(d, x.denominator)
        self.cols = [tuple((i, int(x * d)) for i, x in col.items()) for col in m.cols]

    def apply(self, v: Vec) -> Vec:
        out: Dict[int, int] = {}
        cols = self.cols
        for j, c in v.items():
            for i, a in cols[j]:
                out[i] = out.get(i, 0) + a * c
        return {i: x for i, x in out.items() if x}


class NotCyclicError(RuntimeError):
    pass


def _grow(space, frontier: Iterable[Vec], ops: Sequence[_IntOperator], sink: List[Vec]) -> None:
    frontier = list(frontier)
    while frontier:
        new = [v for v in frontier if v and space.add(v)]
        sink.extend(new)
        frontier = [op.apply(v) for v in new for op in ops]


class GradedRealization:
    """The associated graded module of a cyclic module.

    ``levels[n]`` holds integer vectors whose classes form a basis of
    Gr[n] = F(n)/F(n-1); the underlying block subspace has one checkpoint
    per level, so ``contains(v, n)`` tests ``v in F(n)``.
    """

    def __init__(self, base: CyclicModule, levels: List[List[Vec]], space):
        self.base = base
        self.levels = levels
        self.space = space
        self._rref: Dict[Tuple[Weight, int], Subspace] = {}
        self._gr_cache: Dict[Tuple[str, int, int], list] = {}

    @property
    def module(self) -> FiniteModule:
        return self.base.module

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def top(self) -> int:
        """Highest nonzero degree of Gr."""
        return len(self.levels) - 1

    @property
    def graded_dims(self) -> Tuple[int, ...]:
        return tuple(len(l) for l in self.levels)

    @property
    def cyclic_vector(self) -> Dict[int, Fraction]:
        return self.base.vector

    @property
    def weight(self) -> Weight:
        return self.base.weight

    def __repr__(self) -> str:
        return f"GradedRealization(dim={self.dim}, graded_dims={list(self.graded_dims)})"

    # -- membership ---------------------------------------------------------------

    def contains(self, vec: Dict[int, Fraction], n: int) -> bool:
        """Whether ``vec`` lies in F(n)."""
        vec = {i: x for i, x in vec.items() if x}
        if not vec:
            return True
        if n < 0:
            return False
        if n >= self.top:
            return True
        return self.space.contains(vec, upto=n)

    def vanishes_in_gr(self, vec: Dict[int, Fraction], n: int) -> bool:
        """Whether the class of ``vec`` (taken in F(n)) is zero in Gr[n]."""
        return self.contains(vec, n - 1)

    def level_of(self, vec: Dict[int, Fraction]) -> int:
        """Smallest n with ``vec`` in F(n) (-1 for the zero vector)."""
        for n in range(-1, self.top + 1):
            if self.contains(vec, n):
                return n
        raise AssertionError("filtration does not exhaust the module")

    def operator_vanishes_on_gr(self, name: str, degree: int) -> bool:
        """Whether ``name (x) t^degree`` acts as zero on Gr, i.e. maps F(n) into F(n+degree-1)."""
        op = _IntOperator(self.module.action(name, degree))
        return all(self.contains(op.apply(u), n + degree - 1) for n, lvl in enumerate(self.levels) for u in lvl)

    # -- characters -----------------------------------------------------------------

    def graded_character(self) -> GradedCharacter:
        weights = self.module.weights
        terms: Dict[Tuple[Fraction, Fraction, int], int] = {}
        for n, vecs in enumerate(self.levels):
            for v in vecs:
                w = weights[next(iter(v))]
                key = (w[0], w[1], n)
                terms[key] = terms.get(key, 0) + 1
        return GradedCharacter(terms)

    def character(self) -> FormalCharacter:
        return self.graded_character().ungraded()

    # -- canonical graded pieces -------------------------------------------------------

    def _block_rref(self, wt: Weight, n: int) -> Subspace:
        """Canonical rref basis of F(n) in the weight space ``wt`` (local coordinates)."""
        n = min(n, self.top)
        key = (wt, n)
        sub = self._rref.get(key)
        if sub is None:
            size = len(self.module.blocks[wt])
            if n < 0:
                sub = Subspace(size)
            else:
                pos = self.module.position
                rows = []
                for lvl in self.levels[: n + 1]:
                    for v in lvl:
                        if self.module.weights[next(iter(v))] == wt:
                            row = [0] * size
                            for i, x in v.items():
                                row[pos[i]] = x
                            rows.append(row)
                sub = Subspace(size, rows)
            self._rref[key] = sub
        return sub

    @cached_property
    def _gr_basis(self) -> List[List[Tuple[Weight, List[Fraction]]]]:
        """Per level, the canonical lifts (weight, local row) of a Gr basis."""
        out = []
        blocks = sorted(self.module.blocks, reverse=True)
        for n in range(self.top + 1):
            lvl = []
            for wt in blocks:
                new = self._block_rref(wt, n).quotient_basis(self._block_rref(wt, n - 1))
                lvl.extend((wt, row) for row in new)
            out.append(lvl)
        return out

    def gr_basis_size(self, n: int) -> int:
        return len(self._gr_basis[n]) if 0 <= n <= self.top else 0

    def _lift(self, wt: Weight, row: Sequence[Fraction]) -> Dict[int, Fraction]:
        idx = self.module.blocks[wt]
        return {idx[k]: x for k, x in enumerate(row) if x}

    def gr_coordinates(self, vec: Dict[int, Fraction], n: int) -> List[Fraction]:
        """Coordinates of the class of ``vec`` (in F(n)) in the canonical Gr[n] basis."""
        if n < 0 or n > self.top:
            return []
        if not self.contains(vec, n):
            raise ValueError(f"vector is not in F({n})")
        pos = self.module.position
        pieces: Dict[Weight, List[Fraction]] = {}
        for i, x in vec.items():
            wt = self.module.weights[i]
            row = pieces.setdefault(wt, [Fraction(0)] * len(self.module.blocks[wt]))
            row[pos[i]] += Fraction(x)
        out: List[Fraction] = []
        blocks = sorted(self.module.blocks, reverse=True)
        for wt in blocks:
            cur = self._block_rref(wt, n)
            prev = self._block_rref(wt, n - 1)
            old = set(prev._pivots)
            new_piv = [p for p in cur._pivots if p not in old]
            if not new_piv:
                continue
            piece = pieces.get(wt)
            if piece is None:
                out.extend([Fraction(0)] * len(new_piv))
                continue
            red = prev.reduce(piece)
            out.extend(red[p] for p in new_piv)
        return out

    def graded_action(self, name: str, degree: int, n: int) -> List[List[Fraction]]:
        """Matrix of ``name (x) t^degree`` from Gr[n] to Gr[n + degree] (dense rows)."""
        key = (name, degree, n)
        hit = self._gr_cache.get(key)
        if hit is not None:
            return hit
        rows_out = self.gr_basis_size(n + degree)
        cols_in = self.gr_basis_size(n)
        mat = [[Fraction(0)] * cols_in for _ in range(rows_out)]
        if rows_out and cols_in:
            op = self.module.action(name, degree)
            for j, (wt, row) in enumerate(self._gr_basis[n]):
                image = op.apply(self._lift(wt, row))
                for i, c in enumerate(self.gr_coordinates(image, n + degree)):
                    mat[i][j] = c
        self._gr_cache[key] = mat
        return mat

    def graded_module(self) -> CyclicModule:
        """Gr as a g[t]-module in its canonical basis, level by level."""
        offsets = [0]
        for n in range(self.top + 1):
            offsets.append(offsets[-1] + self.gr_basis_size(n))
        dim = offsets[-1]
        labels, weights, parities = [], [], []
        par_of = {}
        for wt, idx in self.module.blocks.items():
            par_of[wt] = self.module.parities[idx[0]]
        for n in range(self.top + 1):
            for k, (wt, _) in enumerate(self._gr_basis[n]):
                labels.append(f"[{n}:{k}]")
                weights.append(wt)
                parities.append(par_of[wt])

        def actor(name: str, degree: int) -> SparseMatrix:
            cols: List[Dict[int, Fraction]] = [dict() for _ in range(dim)]
            for n in range(self.top + 1):
                if n + degree > self.top:
                    continue
                mat = self.graded_action(name, degree, n)
                for i, row in enumerate(mat):
                    for j, x in enumerate(row):
                        if x:
                            cols[offsets[n] + j][offsets[n + degree] + i] = x
            return SparseMatrix(dim, dim, cols)

        ann = tuple([Fraction(0)] * (self.top + 1) + [Fraction(1)])
        mod = FiniteModule(labels, weights, parities, actor, annihilator=ann)
        coords = self.gr_coordinates(self.cyclic_vector, 0)
        support = [k for k, x in enumerate(coords) if x]
        if len(support) != 1 or coords[support[0]] != 1:
            raise RuntimeError("cyclic vector is not a canonical basis vector of Gr[0]")
        return CyclicModule(mod, support[0])

    # -- graded submodules ---------------------------------------------------------------

    def gr_closure_dim(self, vec: Dict[int, Fraction], n: int) -> int:
        """Dimension of the graded submodule of Gr generated by the class of ``vec`` in Gr[n]."""
        mod = self.module
        ops = [(_IntOperator(mod.action(g, 0)), 0) for g in CHEVALLEY]
        ops.append((_IntOperator(mod.action("x3", 1)), 1))
        echelons: Dict[Tuple[int, Weight], object] = {}
        marks = self.space.marks
        total = 0

        def add(v: Vec, m: int) -> bool:
            parts = self.space.split(v)
            (wt, dense), = parts.items()
            e = echelons.get((m, wt))
            if e is None:
                base = self.space.echelons.get(wt)
                limit = marks[m - 1].get(wt, 0) if m >= 1 else 0
                if base is None:
                    from .kernel import Echelon
                    e = Echelon(len(mod.blocks[wt]))
                else:
                    e = base.copy(limit)
                echelons[(m, wt)] = e
            return e.add(dense)

        start = integer_scaled(vec)
        frontier = [(start, n)] if start else []
        while frontier:
            nxt = []
            for v, m in frontier:
                if m > self.top or not v:
                    continue
                if add(v, m):
                    total += 1
                    for op, d in ops:
                        nxt.append((op.apply(v), m + d))
            frontier = nxt
        return total


def filtrate(cm: CyclicModule) -> GradedRealization:
    mod = cm.module
    if not mod.current:
        raise ValueError("filtrate needs a g[t]-module")
    ops0 = [_IntOperator(mod.action(g, 0)) for g in CHEVALLEY]
    raise_op = _IntOperator(mod.action("x3", 1))
    space = mod.new_subspace()
    levels: List[List[Vec]] = []
    first: List[Vec] = []
    _grow(space, [{cm.cyclic_index: 1}], ops0, first)
    levels.append(first)
    space.checkpoint()
    while space.dim < mod.dim:
        seeds = [raise_op.apply(v) for v in levels[-1]]
        new: List[Vec] = []
        _grow(space, seeds, ops0, new)
        if not new:
            raise NotCyclicError(
                f"filtration stalls at dimension {space.dim} of {mod.dim}; the vector is not cyclic"
            )
        levels.append(new)
        space.checkpoint()
    return GradedRealization(cm, levels, space)


@dataclass(frozen=True)
class FusionSpec:
    """Factors ``(kappa, m, z)``: the Kac module K((kappa, m)) evaluated at z."""

    factors: Tuple[Tuple[Fraction, int, Fraction], ...]

    def __post_init__(self):
        clean = []
        for kappa, m, z in self.factors:
            m = Fraction(m)
            if m.denominator != 1 or m < 1:
                raise ValueError(f"factor size must be a positive integer, got {m}")
            clean.append((Fraction(kappa), int(m), Fraction(z)))
        zs = [z for _, _, z in clean]
        if len(set(zs)) != len(zs):
            raise ValueError("fusion parameters must be pairwise distinct")
        object.__setattr__(self, "factors", tuple(clean))

    @classmethod
    def default(cls, l1, sizes: Sequence[int], z: Optional[Sequence] = None, kappa: Optional[Sequence] = None):
        """Defaults: ``z_i = i``; ``kappa_0 = l1`` and the other kappas zero."""
        sizes = list(sizes)
        if not sizes:
            if Fraction(l1) != 0:
                raise ValueError("the empty fusion product has weight (0, 0)")
            return cls(())
        if z is None:
            z = list(range(len(sizes)))
        if kappa is None:
            kappa = [Fraction(l1)] + [Fraction(0)] * (len(sizes) - 1)
        if not (len(z) == len(kappa) == len(sizes)):
            raise ValueError("z, kappa and sizes must have equal length")
        if sum(map(Fraction, kappa)) != Fraction(l1):
            raise ValueError("kappas must sum to l1")
        return cls(tuple(zip(kappa, sizes, z)))

    @property
    def weight(self) -> Weight:
        return (sum(k for k, _, _ in self.factors), Fraction(sum(m for _, m, _ in self.factors)))


def fusion_module(spec: FusionSpec) -> CyclicModule:
    if not spec.factors:
        return trivial_module()
    return tensor([evaluation(kac_b2((k, m)), z) for k, m, z in spec.factors])


def fuse(spec: FusionSpec) -> GradedRealization:
    return filtrate(fusion_module(spec))


def weyl_spec(l1, l2: int, z=None, kappa=None) -> FusionSpec:
    """l2 Kac modules of size 1: the graded local Weyl module of weight (l1, l2)."""
    return FusionSpec.default(l1, (1,) * l2, z, kappa)


def cv_spec(l1, xi: Sequence[int], z=None, kappa=None) -> FusionSpec:
    return FusionSpec.default(l1, tuple(xi), z, kappa)


def demazure_spec(ell: int, l1, l2: int, z=None, kappa=None) -> FusionSpec:
    from .characters import demazure_sizes

    return FusionSpec.default(l1, demazure_sizes(ell, l2), z, kappa)


def truncated_spec(N: int, l1, l2: int, z=None, kappa=None) -> FusionSpec:
    from .characters import truncated_sizes

    return FusionSpec.default(l1, truncated_sizes(N, l2), z, kappa)
