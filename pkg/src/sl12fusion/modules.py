"""Finite-dimensional modules over sl(1|2) and its current algebra."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import algebra
from .algebra import BASIS, Weight
from .exactla import BlockSubspace, SparseMatrix, Subspace, nullspace
from .pbw import Element, Gen, Order, normal_form

Actor = Callable[[str, int], SparseMatrix]

# Generators of sl(1|2) as a Lie superalgebra; a subspace stable under these
# is stable under all of sl(1|2).
CHEVALLEY = ("x1", "x2", "y1", "y2")


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_shift(p: Sequence[Fraction], z: Fraction) -> Tuple[Fraction, ...]:
    """Coefficients of ``p(t + z)``."""
    out = [Fraction(0)] * len(p)
    for k, a in enumerate(p):
        for j in range(k + 1):
            out[j] += a * comb(k, j) * z ** (k - j)
    return tuple(out)


class FiniteModule:
    """A finite-dimensional module with a weight basis.

    ``actor(name, m)`` returns the matrix of ``name (x) t^m``; results are
    cached.  Modules built from a g-module only (``current=False``) reject
    positive degrees.  ``annihilator`` holds the coefficients (constant term
    first) of a monic polynomial P with ``g (x) P(t)`` acting as zero, when
    one is known.
    """

    def __init__(
        self,
        labels: Sequence[str],
        weights: Sequence[Weight],
        parities: Sequence[int],
        actor: Actor,
        *,
        current: bool = True,
        annihilator: Optional[Sequence[Fraction]] = None,
        degree_cap_hint: Optional[int] = None,
    ):
        if not (len(labels) == len(weights) == len(parities)):
            raise ValueError("labels, weights and parities differ in length")
        self.labels = tuple(labels)
        self.weights = tuple((Fraction(a), Fraction(b)) for a, b in weights)
        self.parities = tuple(int(p) % 2 for p in parities)
        self._actor = actor
        self.current = current
        self.annihilator = tuple(Fraction(c) for c in annihilator) if annihilator is not None else None
        if degree_cap_hint is None and self.annihilator is not None:
            degree_cap_hint = len(self.annihilator) - 2
        self.degree_cap_hint = degree_cap_hint
        self._cache: Dict[Tuple[str, int], SparseMatrix] = {}
        self._lock = threading.Lock()
        blocks: Dict[Weight, List[int]] = {}
        for i, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(i)
        self.blocks = blocks
        pos = [0] * len(self.labels)
        for idx in blocks.values():
            for k, i in enumerate(idx):
                pos[i] = k
        self.position = pos

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"FiniteModule(dim={self.dim})"

    def action(self, name: str, degree: int = 0) -> SparseMatrix:
        if isinstance(name, Gen):
            name, degree = name.name, name.degree
        if name not in BASIS:
            raise KeyError(name)
        if degree < 0:
            raise ValueError("negative degree")
        if degree > 0 and not self.current:
            raise ValueError("module carries no current-algebra structure")
        key = (name, degree)
        with self._lock:
            m = self._cache.get(key)
        if m is None:
            m = self._actor(name, degree)
            with self._lock:
                self._cache.setdefault(key, m)
        return m

    def apply(self, e: Element, v: Dict[int, Fraction]) -> Dict[int, Fraction]:
        """Action of a U(g[t]) element on a coordinate vector."""
        out: Dict[int, Fraction] = {}
        for word, c in e.terms.items():
            w = dict(v)
            for g in reversed(word):
                if not w:
                    break
                w = self.action(g.name, g.degree).apply(w)
            for i, x in w.items():
                out[i] = out.get(i, 0) + c * x
        return {i: x for i, x in out.items() if x}

    def basis_vector(self, i: int) -> Dict[int, Fraction]:
        return {i: Fraction(1)}

    def new_subspace(self) -> BlockSubspace:
        return BlockSubspace(self.weights, self.position, {w: len(ix) for w, ix in self.blocks.items()})

    def to_json(self, degrees: Iterable[int] = (0,)) -> str:
        acts = {}
        for d in degrees:
            for g in BASIS:
                acts[f"{g}({d})"] = [[i, j, str(x)] for i, j, x in self.action(g, d).triplets()]
        payload = {
            "labels": list(self.labels),
            "weights": [[str(a), str(b)] for a, b in self.weights],
            "parities": list(self.parities),
            "action": acts,
        }
        return json.dumps(payload, sort_keys=True)


@dataclass(frozen=True)
class CyclicModule:
    """A module with a distinguished even cyclic basis vector."""

    module: FiniteModule
    cyclic_index: int

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def vector(self) -> Dict[int, Fraction]:
        return {self.cyclic_index: Fraction(1)}

    @property
    def weight(self) -> Weight:
        return self.module.weights[self.cyclic_index]

    def action(self, name: str, degree: int = 0) -> SparseMatrix:
        return self.module.action(name, degree)


# -- basic modules -------------------------------------------------------------

def _zero(n: int) -> SparseMatrix:
    return SparseMatrix.zero(n, n)


def trivial_module() -> CyclicModule:
    m = FiniteModule(["1"], [(0, 0)], [0], lambda name, d: _zero(1), annihilator=(0, 1))
    return CyclicModule(m, 0)


def _check_l2(l2) -> int:
    l2 = Fraction(l2)
    if l2.denominator != 1 or l2 < 0:
        raise ValueError(f"second weight coordinate must be a nonnegative integer, got {l2}")
    return int(l2)


def irreducible_gl2(l1, l2) -> CyclicModule:
    """Irreducible gl(2)-module of highest weight (l1, l2); odd generators act by zero."""
    l1 = Fraction(l1)
    n = _check_l2(l2)
    dim = n + 1
    weights = [(l1 - i, n - 2 * i) for i in range(dim)]

    def actor(name: str, degree: int) -> SparseMatrix:
        cols: List[Dict[int, Fraction]] = [dict() for _ in range(dim)]
        for i in range(dim):
            if name == "y2" and i + 1 < dim:
                cols[i][i + 1] = Fraction(1)
            elif name == "x2" and i > 0:
                cols[i][i - 1] = Fraction(i * (n - i + 1))
            elif name in ("h1", "h2"):
                val = weights[i][0] if name == "h1" else Fraction(weights[i][1])
                if val:
                    cols[i][i] = val
        return SparseMatrix(dim, dim, cols)

    labels = [f"y2^{i} v" for i in range(dim)]
    return CyclicModule(FiniteModule(labels, weights, [0] * dim, actor, current=False), 0)


# The exterior generators u, w and the odd pair killing L, per induced Borel.
_INDUCED = {
    1: (("y1", "y3"), ("x1", "x3")),
    3: (("x1", "x3"), ("y1", "y3")),
}


def kac_induced(borel: int, lam: Weight) -> CyclicModule:
    """Kac module induced from L_gl(lam) for the Borel b(1) or b(3)."""
    if borel not in _INDUCED:
        raise ValueError("kac_induced supports the Borels 1 and 3")
    l1 = Fraction(lam[0])
    n = _check_l2(lam[1])
    (u, w), killers = _INDUCED[borel]
    order = Order((u, w, "y2", "x2") + killers + ("h1", "h2"))
    ext = [(), (u,), (w,), (u, w)]
    top = n + 1
    idx = {(m, j): k * top + j for k, m in enumerate(ext) for j in range(top)}
    wt_u, wt_w = algebra.root_of(u), algebra.root_of(w)
    labels, weights, parities = [], [], []
    for m in ext:
        shift = [Fraction(0), Fraction(0)]
        for g in m:
            r = wt_u if g == u else wt_w
            shift[0] += r.h1
            shift[1] += r.h2
        for j in range(top):
            labels.append(("*".join(m) + " (x) " if m else "") + f"y2^{j} v")
            weights.append((l1 + shift[0] - j, n + shift[1] - 2 * j))
            parities.append(len(m) % 2)
    lam_vals = {"h1": l1, "h2": Fraction(n)}

    def evaluate(word) -> Optional[Tuple[int, Fraction]]:
        coeff = Fraction(1)
        k = 0
        while k < len(word) and word[k].name in (u, w):
            k += 1
        m = tuple(g.name for g in word[:k])
        j = 0
        while k < len(word) and word[k].name == "y2":
            j += 1
            k += 1
        for g in word[k:]:
            if g.name not in lam_vals:
                return None
            coeff *= lam_vals[g.name]
        if j > n or not coeff:
            return None
        return idx[(m, j)], coeff

    def actor(name: str, degree: int) -> SparseMatrix:
        dim = len(labels)
        cols: List[Dict[int, Fraction]] = [dict() for _ in range(dim)]
        for (m, j), col in idx.items():
            word = (Gen(name),) + tuple(Gen(g) for g in m) + (Gen("y2"),) * j
            for wd, c in normal_form(Element({word: 1}), order).terms.items():
                hit = evaluate(wd)
                if hit is not None:
                    i, val = hit
                    cols[col][i] = cols[col].get(i, 0) + c * val
            cols[col] = {i: x for i, x in cols[col].items() if x}
        return SparseMatrix(dim, dim, cols)

    return CyclicModule(FiniteModule(labels, weights, parities, actor, current=False), 0)


B2_RAISING = algebra.raising_generators(2)  # y1, x2, x3


def kac_b2(lam: Weight, route: Optional[int] = None) -> CyclicModule:
    """Kac module for the Borel b(2), realized through b(1) or b(3).

    ``route`` forces the realization (1 or 3) when both are available; by
    default b(1) is used whenever ``l1 != 0``.
    """
    lam = algebra.weight(*lam)
    if not algebra.in_dominant_b2(lam):
        raise ValueError(f"{lam} is not dominant for b(2)")
    l1, l2 = lam
    if l1 == 0 and l2 == 0:
        return trivial_module()
    if route is None:
        route = 1 if l1 != 0 else 3
    if route == 1:
        if l1 == 0:
            raise ValueError("the b(1) route needs l1 != 0")
        base = kac_induced(1, (l1, l2 - 1))
    elif route == 3:
        if l1 == l2:
            raise ValueError("the b(3) route needs l1 != l2")
        base = kac_induced(3, (l1 - 1, l2 - 1))
    else:
        raise ValueError("route must be 1 or 3")
    mod = base.module
    sing = singular_vectors_by_weight(mod, B2_RAISING).get(lam)
    if sing is None or sing.dim != 1:
        raise RuntimeError(f"highest-weight vector of weight {lam} is not unique")
    vec = sing.basis[0]
    support = [i for i, x in enumerate(vec) if x]
    if len(support) != 1:
        raise RuntimeError("highest-weight vector is not a basis vector")
    hw = mod.blocks[lam][support[0]]
    flip = mod.parities[hw]
    if flip:
        mod = FiniteModule(
            mod.labels, mod.weights, [1 - p for p in mod.parities], mod._actor, current=False
        )
    return CyclicModule(mod, hw)


# -- singular vectors and decompositions ----------------------------------------

def singular_vectors_by_weight(mod: FiniteModule, raising: Iterable) -> Dict[Weight, Subspace]:
    """Joint kernel of the raising operators, one Subspace per weight block.

    Each Subspace lives in the coordinates of its block (``mod.blocks[w]``).
    """
    gens = [g if isinstance(g, Gen) else Gen(g) for g in raising]
    mats = [mod.action(g.name, g.degree) for g in gens]
    out = {}
    for wt, idx in mod.blocks.items():
        rows: Dict[int, List[Fraction]] = {}
        for mat in mats:
            for k, j in enumerate(idx):
                for i, x in mat.cols[j].items():
                    key = (id(mat), i)
                    row = rows.setdefault(key, [Fraction(0)] * len(idx))
                    row[k] += x
        out[wt] = nullspace(list(rows.values()), len(idx))
    return out


def embed(mod: FiniteModule, wt: Weight, local: Sequence[Fraction]) -> List[Fraction]:
    v = [Fraction(0)] * mod.dim
    for k, i in enumerate(mod.blocks[wt]):
        v[i] = Fraction(local[k])
    return v


def singular_vectors(mod: FiniteModule, raising: Iterable = B2_RAISING) -> Subspace:
    rows = []
    for wt, sub in sorted(singular_vectors_by_weight(mod, raising).items()):
        rows.extend(embed(mod, wt, b) for b in sub.basis)
    return Subspace(mod.dim, rows)


def is_singular(mod: FiniteModule, vec: Dict[int, Fraction], raising: Iterable = B2_RAISING) -> bool:
    return all(not mod.action(g).apply(vec) for g in raising)


def is_irreducible(cm: CyclicModule) -> bool:
    """Irreducibility of a b(2) highest-weight module via singular vectors."""
    if not is_singular(cm.module, cm.vector):
        raise ValueError("cyclic vector is not singular")
    return singular_vectors(cm.module).dim == 1


def g0_decompose(mod: FiniteModule) -> List[Weight]:
    """gl(2) highest weights, with multiplicity, of the even part action."""
    out = []
    for wt, sub in singular_vectors_by_weight(mod, ["x2"]).items():
        out.extend([wt] * sub.dim)
    return sorted(out)


# -- constructions ---------------------------------------------------------------

def evaluation(cm: CyclicModule, z) -> CyclicModule:
    """Make a g-module into a g[t]-module with ``x(m) = z^m x``."""
    z = Fraction(z)
    base = cm.module

    def actor(name: str, degree: int) -> SparseMatrix:
        m = base.action(name, 0)
        return m if degree == 0 else m.scale(z ** degree)

    mod = FiniteModule(base.labels, base.weights, base.parities, actor, annihilator=(-z, 1))
    return CyclicModule(mod, cm.cyclic_index)


def _tensor2(a: FiniteModule, b: FiniteModule) -> FiniteModule:
    da, db = a.dim, b.dim
    labels = [f"{la} | {lb}" for la in a.labels for lb in b.labels]
    weights = [(wa[0] + wb[0], wa[1] + wb[1]) for wa in a.weights for wb in b.weights]
    parities = [(pa + pb) % 2 for pa in a.parities for pb in b.parities]
    signs_even = [1] * da
    signs_odd = [-1 if p else 1 for p in a.parities]

    def actor(name: str, degree: int) -> SparseMatrix:
        left = a.action(name, degree).kron_slot(1, db, [1])
        signs = signs_odd if algebra.parity(name) else signs_even
        right = b.action(name, degree).kron_slot(da, 1, signs)
        return left + right

    ann = None
    if a.annihilator is not None and b.annihilator is not None:
        ann = _poly_mul(a.annihilator, b.annihilator)
    return FiniteModule(labels, weights, parities, actor, current=a.current and b.current, annihilator=ann)


def tensor(factors: Sequence[CyclicModule]) -> CyclicModule:
    """Super tensor product with Koszul signs; cyclic vector is the product."""
    if not factors:
        raise ValueError("empty tensor product")
    mod = factors[0].module
    index = factors[0].cyclic_index
    for f in factors[1:]:
        index = index * f.module.dim + f.cyclic_index
        mod = _tensor2(mod, f.module)
    return CyclicModule(mod, index)


def shift(cm: CyclicModule, z) -> CyclicModule:
    """Pull back along ``x (x) t^k -> x (x) (t - z)^k``."""
    z = Fraction(z)
    base = cm.module
    if z == 0:
        return cm

    def actor(name: str, degree: int) -> SparseMatrix:
        out = SparseMatrix.zero(base.dim, base.dim)
        for j in range(degree + 1):
            c = comb(degree, j) * (-z) ** (degree - j)
            out = out.combine(base.action(name, j), c)
        return out

    ann = _poly_shift(base.annihilator, z) if base.annihilator is not None else None
    mod = FiniteModule(base.labels, base.weights, base.parities, actor, annihilator=ann)
    return CyclicModule(mod, cm.cyclic_index)


def representation_defects(mod: FiniteModule, max_degree: int = 1, names: Sequence[str] = BASIS) -> List[Tuple]:
    """Pairs violating ``[x(m), y(n)] = [x, y](m + n)`` on the module."""
    bad = []
    degrees = range(max_degree + 1) if mod.current else range(1)
    for a in names:
        for b in names:
            for m in degrees:
                for n in degrees:
                    if m + n > max_degree and mod.current:
                        continue
                    A, B = mod.action(a, m), mod.action(b, n)
                    sign = -1 if algebra.parity(a) and algebra.parity(b) else 1
                    lhs = (A @ B).combine(B @ A, -sign)
                    rhs = SparseMatrix.zero(mod.dim, mod.dim)
                    for k, c in algebra.bracket(a, b).items():
                        rhs = rhs.combine(mod.action(k, m + n), c)
                    if lhs != rhs:
                        bad.append((a, m, b, n))
    return bad


def parity_defects(mod: FiniteModule) -> List[str]:
    """Generators whose action does not shift parity by their own parity."""
    bad = []
    for g in BASIS:
        p = algebra.parity(g)
        for j, col in enumerate(mod.action(g).cols):
            if any((mod.parities[i] - mod.parities[j] - p) % 2 for i in col):
                bad.append(g)
                break
    return bad


def generates(cm: CyclicModule) -> bool:
    """Whether the cyclic vector generates the whole module."""
    mod = cm.module
    gens = [(g, 0) for g in CHEVALLEY]
    if mod.current:
        gens.append(("x3", 1))
    return closure_dim(mod, cm.vector, gens) == mod.dim


def closure_dim(mod: FiniteModule, vec: Dict[int, Fraction], gens: Sequence[Tuple[str, int]]) -> int:
    """Dimension of the span of ``vec`` under the operators ``gens``.

    ``vec`` must be a weight vector and ``gens`` root vectors or Cartan
    elements, so every vector produced stays weight-homogeneous.
    """
    space = mod.new_subspace()
    frontier = [vec]
    while frontier:
        new = [v for v in frontier if v and space.add(v)]
        frontier = [mod.action(g, d).apply(v) for v in new for g, d in gens]
    return space.dim
