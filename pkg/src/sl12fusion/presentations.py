"""Relation suites for presented g[t]-modules, checked on fusion realizations.

A relation "X w = 0" for a homogeneous X of degree a and a vector w sitting
in Gr[n] is checked on the filtered module as ``X w in F(n + a - 1)``.
Operators of positive degree above the top filtration degree vanish on Gr,
which makes every "for all r" family finite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Weight, raising_generators, lowering_generators
from .combinatorics import Partition, partition
from .fusion import FusionSpec, GradedRealization, fuse, filtrate, weyl_spec
from .kernel import Echelon
from .modules import CyclicModule, shift, tensor
from .pbw import Element, divided_power, y2rs_element

Vec = Dict[int, Fraction]

B2_RAISING = raising_generators(2)
B2_LOWERING = lowering_generators(2)


@dataclass(frozen=True)
class CVDatum:
    l1: Fraction
    xi: Partition

    def __post_init__(self):
        object.__setattr__(self, "l1", Fraction(self.l1))
        object.__setattr__(self, "xi", partition(self.xi))

    @property
    def l2(self) -> int:
        return sum(self.xi)

    @property
    def weight(self) -> Weight:
        return (self.l1, Fraction(self.l2))


@dataclass
class RelationResult:
    relation: str
    params: dict
    passed: bool
    witness: Optional[Vec] = None

    def to_record(self) -> dict:
        rec = {"relation": self.relation, "params": {k: str(v) for k, v in self.params.items()}, "pass": self.passed}
        if self.witness is not None:
            rec["witness"] = {str(i): str(x) for i, x in sorted(self.witness.items())}
        return rec


@dataclass
class RelationReport:
    suite: str
    case: str = ""
    results: List[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failures(self) -> List[RelationResult]:
        return [r for r in self.results if not r.passed]

    def record(self, relation: str, passed: bool, witness: Optional[Vec] = None, **params) -> bool:
        if not passed and not witness:
            witness = None
        self.results.append(RelationResult(relation, params, bool(passed), None if passed else witness))
        return passed

    def extend(self, other: "RelationReport") -> "RelationReport":
        self.results.extend(other.results)
        return self

    def to_records(self) -> List[dict]:
        return [dict(suite=self.suite, case=self.case, **r.to_record()) for r in self.results]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), sort_keys=True)

    def summary(self) -> str:
        n = len(self.results)
        return f"{self.suite}[{self.case}]: {n - len(self.failures)}/{n} relations hold"


# -- helpers ---------------------------------------------------------------------------


def _gen(name: str, a: int = 0) -> Element:
    return Element.gen(name, a)


def _power(name: str, a: int, p: int) -> Element:
    return Element.word([(name, a)] * p) if p else Element.one()


def _vanishes(G: GradedRealization, X: Element, degree: int, vec: Vec, level: int) -> Tuple[bool, Vec]:
    """Whether X vec = 0 in Gr, for X of the given t-degree and vec in Gr[level]."""
    out = G.module.apply(X, vec)
    if degree == 0 and level == 0:
        return (not out), out
    return G.contains(out, level + degree - 1), out


def _top(G: GradedRealization) -> int:
    return max(G.top, 0)


def _weyl_suite(G: GradedRealization, lam: Weight, vec: Vec, level: int, report: RelationReport) -> None:
    l1, l2 = Fraction(lam[0]), Fraction(lam[1])
    top = _top(G)
    for name in B2_RAISING:
        for a in range(top + 1):
            ok, w = _vanishes(G, _gen(name, a), a, vec, level)
            report.record(f"{name}({a}) w = 0", ok, w, a=a)
    for h, val in (("h1", l1), ("h2", l2)):
        X = _gen(h) - Element({(): val})
        ok, w = _vanishes(G, X, 0, vec, level)
        report.record(f"{h}(0) w = {val} w", ok, w)
        for a in range(1, top + 1):
            ok, w = _vanishes(G, _gen(h, a), a, vec, level)
            report.record(f"{h}({a}) w = 0", ok, w, a=a)
    if l2.denominator != 1 or l2 < 0:
        report.record("l2 is a nonnegative integer", False, None)
        return
    ok, w = _vanishes(G, _power("y2", 0, int(l2) + 1), 0, vec, level)
    report.record(f"y2(0)^{int(l2) + 1} w = 0", ok, w)


# -- suites ----------------------------------------------------------------------------


def check_weyl_relations(G: GradedRealization, lam: Weight, vec: Optional[Vec] = None, level: int = 0) -> RelationReport:
    """Defining relations of the graded local Weyl module W(lam) at ``vec`` (default: the cyclic vector)."""
    report = RelationReport("weyl", f"lambda={tuple(map(str, lam))}")
    _weyl_suite(G, lam, G.cyclic_vector if vec is None else vec, level, report)
    return report


def cv_grid(xi: Partition, s_max: int) -> List[Tuple[int, int, int]]:
    """The reduced (k, r, s) grid: xi_{k+1} <= r < xi_k, r > 0, k r + xi_{k+1} + ... + xi_d < s <= s_max."""
    xi = tuple(xi)
    ext = xi + (0,)
    out = []
    for k in range(len(xi)):
        tail = sum(xi[k + 1 :])
        for r in range(max(ext[k + 1], 1), ext[k]):
            for s in range(k * r + tail + 1, s_max + 1):
                out.append((k, r, s))
    return out


def check_cv_relations(
    G: GradedRealization, datum: CVDatum, vec: Optional[Vec] = None, level: int = 0, forms: Sequence[str] = ("b", "c", "filtered")
) -> RelationReport:
    """Weyl relations plus the extra relations of V(datum) in their reduced forms."""
    report = RelationReport("cv", f"l1={datum.l1},xi={datum.xi}")
    vec = G.cyclic_vector if vec is None else vec
    _weyl_suite(G, datum.weight, vec, level, report)
    l2 = datum.l2
    s_max = max(_top(G), l2)
    for k, r, s in cv_grid(datum.xi, s_max):
        if "b" in forms:
            ok, w = _vanishes(G, y2rs_element(r, s), s, vec, level)
            report.record("y2(r,s) w = 0", ok, w, k=k, r=r, s=s)
        if "c" in forms:
            ok, w = _vanishes(G, y2rs_element(r, s, start=k), s, vec, level)
            report.record("sum from degree k of divided y2 powers = 0", ok, w, k=k, r=r, s=s)
        if "filtered" in forms and r + s <= l2:
            X = divided_power("x2", 1, s) * divided_power("y2", 0, r + s)
            out = G.module.apply(X, vec)
            ok = G.contains(out, level + s - 1)
            report.record("x2(1)^(s) y2(0)^(r+s) w in F(s-1)", ok, out, k=k, r=r, s=s)
    return report


def check_garland_action(G: GradedRealization, l2: int) -> RelationReport:
    """x2(1)^(s) y2(0)^(r+s) v = (-1)^s y2(r,s) v in Gr for r, s > 0 with r + s <= l2."""
    report = RelationReport("garland", f"l2={l2}")
    v = G.cyclic_vector
    for total in range(2, l2 + 1):
        for s in range(1, total):
            r = total - s
            X = divided_power("x2", 1, s) * divided_power("y2", 0, r + s) - y2rs_element(r, s) * ((-1) ** s)
            ok, w = _vanishes(G, X, s, v, 0)
            report.record("x2(1)^(s) y2^(r+s) v = (-1)^s y2(r,s) v", ok, w, r=r, s=s)
    return report


def _demazure_exponent(ell: int, l2: int, r: int) -> int:
    return max(0, l2 - ell * r) + 1


def check_demazure(G: GradedRealization, ell: int, lam: Weight) -> RelationReport:
    report = RelationReport("demazure", f"ell={ell},lambda={tuple(map(str, lam))}")
    v = G.cyclic_vector
    _weyl_suite(G, lam, v, 0, report)
    l2 = int(lam[1])
    for r in range(_top(G) + 1):
        e = _demazure_exponent(ell, l2, r)
        ok, w = _vanishes(G, _power("y2", r, e), r * e, v, 0)
        report.record(f"y2({r})^{e} v = 0", ok, w, r=r)
    return report


def check_demazure_lowest_weight(G: GradedRealization, ell: int, lam: Weight) -> RelationReport:
    """Relations at v_- = y2(0)^{l2} v: the lowest-weight presentation."""
    report = RelationReport("demazure-lowest", f"ell={ell},lambda={tuple(map(str, lam))}")
    l1, l2 = Fraction(lam[0]), int(lam[1])
    vm = G.module.apply(_power("y2", 0, l2), G.cyclic_vector)
    if not report.record("v_- != 0", bool(vm), None):
        return report
    top = _top(G)
    for name in B2_LOWERING:
        for r in range(top + 1):
            ok, w = _vanishes(G, _gen(name, r), r, vm, 0)
            report.record(f"{name}({r}) v_- = 0", ok, w, r=r)
    mu = {"h1": l1 - l2, "h2": Fraction(-l2)}
    for h, val in mu.items():
        ok, w = _vanishes(G, _gen(h) - Element({(): val}), 0, vm, 0)
        report.record(f"{h}(0) v_- = {val} v_-", ok, w)
        for r in range(1, top + 1):
            ok, w = _vanishes(G, _gen(h, r), r, vm, 0)
            report.record(f"{h}({r}) v_- = 0", ok, w, r=r)
    for r in range(top + 1):
        e = _demazure_exponent(ell, l2, r)
        ok, w = _vanishes(G, _power("x2", r, e), r * e, vm, 0)
        report.record(f"x2({r})^{e} v_- = 0", ok, w, r=r)
    report.record("v_- generates", G.gr_closure_dim(vm, 0) == G.dim, None)
    back = G.module.apply(_power("x2", 0, l2), vm)
    v = G.cyclic_vector
    proportional = bool(back) and set(back) == set(v)
    report.record("x2(0)^l2 v_- is a nonzero multiple of v", proportional, back or None)
    return report


def check_truncated(G: GradedRealization, N: int, lam: Weight) -> RelationReport:
    """Weyl relations plus g (x) t^m acting as zero on Gr for N <= m <= top."""
    from .algebra import BASIS

    report = RelationReport("truncated", f"N={N},lambda={tuple(map(str, lam))}")
    _weyl_suite(G, lam, G.cyclic_vector, 0, report)
    for m in range(N, _top(G) + 1):
        for name in BASIS:
            report.record(f"{name}({m}) = 0 on Gr", G.operator_vanishes_on_gr(name, m), None, m=m)
    return report


def check_vanishing(G: GradedRealization, factors: int) -> RelationReport:
    """x(s) v = 0 in Gr for every basis element x and s >= number of fused factors."""
    from .algebra import BASIS

    report = RelationReport("vanishing", f"factors={factors}")
    for s in range(factors, _top(G) + 2):
        for name in BASIS:
            ok, w = _vanishes(G, _gen(name, s), s, G.cyclic_vector, 0)
            report.record(f"{name}({s}) v = 0", ok, w, s=s)
    return report


@dataclass(frozen=True)
class RankResult:
    rank: int
    graded_rank: int
    dim: int

    @property
    def full(self) -> bool:
        return self.rank == self.dim

    @property
    def graded_full(self) -> bool:
        return self.graded_rank == self.dim


def _degree(e: Element) -> int:
    degrees = {sum(g.degree for g in w) for w in e.terms}
    if len(degrees) != 1:
        raise ValueError("element is not homogeneous in t")
    return degrees.pop()


def check_basis_independence(G: GradedRealization, pool: Iterable) -> RankResult:
    """Rank of the pool applied to the cyclic vector, in the module and in Gr.

    ``pool`` holds descriptors with an ``element()`` method (or Elements).
    The graded rank counts the classes in Gr of degree equal to each
    monomial's t-degree.
    """
    mod = G.module
    flat = mod.new_subspace()
    graded: Dict[Tuple[int, Weight], object] = {}
    rank_gr = 0
    for item in pool:
        X = item.element() if hasattr(item, "element") else item
        vec = mod.apply(X, G.cyclic_vector)
        if not vec:
            continue
        flat.add(vec)
        d = _degree(X)
        if d > G.top:
            continue
        (wt, dense), = G.space.split(vec).items()
        e = graded.get((d, wt))
        if e is None:
            base = G.space.echelons.get(wt)
            limit = G.space.marks[d - 1].get(wt, 0) if d >= 1 else 0
            e = base.copy(limit) if base is not None else Echelon(len(mod.blocks[wt]))
            graded[(d, wt)] = e
        if e.add(dense):
            rank_gr += 1
    return RankResult(flat.dim, rank_gr, mod.dim)


def check_embedding(lam: Weight, which: str = "y3", spec: Optional[FusionSpec] = None) -> RelationReport:
    """The graded Weyl module W(lam) inside a larger one through y3(l2) or x1(l2)."""
    l1, l2 = Fraction(lam[0]), int(lam[1])
    if which == "y3":
        big = (l1 + 1, l2 + 1)
    elif which == "x1":
        big = (l1, l2 + 1)
    else:
        raise ValueError("which must be 'y3' or 'x1'")
    G = fuse(spec or weyl_spec(big[0], big[1]))
    report = RelationReport(f"embedding-{which}", f"lambda=({l1},{l2})")
    vp = G.module.apply(_gen(which, l2), G.cyclic_vector)
    if not report.record("v' != 0 in Gr", bool(vp) and not G.contains(vp, l2 - 1), vp or None):
        return report
    _weyl_suite(G, (l1, Fraction(l2)), vp, l2, report)
    dim = G.gr_closure_dim(vp, l2)
    report.record(f"closure dimension {dim} = 4^{l2}", dim == 4 ** l2, None, dim=dim)
    return report


def nongraded_weyl(points: Sequence[Tuple[Weight, Fraction]]) -> CyclicModule:
    """W(psi) as a tensor product of shifted graded Weyl modules, one per point."""
    zs = [Fraction(z) for _, z in points]
    if len(set(zs)) != len(zs):
        raise ValueError("points must be pairwise distinct")
    parts = []
    for mu, z in points:
        Gi = fuse(weyl_spec(mu[0], int(mu[1])))
        parts.append(shift(Gi.graded_module(), -Fraction(z)))
    return tensor(parts)


def check_gr_of_nongraded(points: Sequence[Tuple[Weight, Fraction]]) -> RelationReport:
    lam = (sum(Fraction(mu[0]) for mu, _ in points), sum(Fraction(mu[1]) for mu, _ in points))
    l2 = int(lam[1])
    report = RelationReport("gr-nongraded", ";".join(f"({mu[0]},{mu[1]})@{z}" for mu, z in points))
    G = filtrate(nongraded_weyl(points))
    report.record(f"dim {G.dim} = 4^{l2}", G.dim == 4 ** l2, None, dim=G.dim)
    report.extend(check_weyl_relations(G, lam))
    target = fuse(weyl_spec(lam[0], l2)).graded_character()
    report.record("graded character equals the graded Weyl character", G.graded_character() == target, None)
    return report


def _extra_relation_vanishes(cm: CyclicModule, vec: Vec, r: int, s: int) -> Tuple[bool, Vec]:
    out = cm.module.apply(_power("x2", 1, s) * _power("y2", 0, r + s), vec)
    return (not out), out


def check_exchange_step(G: GradedRealization, datum: CVDatum, c: int, which: str = "y3") -> Tuple[bool, RelationReport]:
    """Transfer of the extra relations from v to y3(c) v (or x1(c) v) in Gr.

    Works in the graded module itself, where relations are exact equalities.
    Returns whether the hypothesis held (the extra relations at the boundary
    values s = k r + eta_{k+1} + ... + eta_e for k < c) and the report on the
    extra relations of (l1 - 1, phi_c(eta)) (l1 unchanged for x1).
    """
    from .combinatorics import phi

    eta = datum.xi
    gr = G.graded_module()
    top = G.top
    w = gr.module.apply(_gen(which, c), gr.vector)
    ext = eta + (0,)
    hypothesis = True
    for k in range(c):
        tail = sum(eta[k + 1 :])
        for r in range(max(ext[k + 1], 1), ext[k]):
            ok, _ = _extra_relation_vanishes(gr, w, r, k * r + tail)
            hypothesis = hypothesis and ok
    new = CVDatum(datum.l1 - (1 if which == "y3" else 0), phi(eta, c))
    report = RelationReport(f"exchange-{which}", f"eta={eta},c={c}")
    for k, r, s in cv_grid(new.xi, top + 1):
        ok, out = _extra_relation_vanishes(gr, w, r, s)
        report.record("x2(1)^s y2^(r+s) w = 0", ok, out, k=k, r=r, s=s)
    return hypothesis, report
