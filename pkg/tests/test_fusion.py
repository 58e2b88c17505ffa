from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sl12fusion.algebra import BASIS
from sl12fusion.characters import char_of
from sl12fusion.exactla import Subspace, matvec_dense
from sl12fusion.fusion import (
    FusionSpec,
    NotCyclicError,
    cv_spec,
    demazure_spec,
    filtrate,
    fuse,
    fusion_module,
    truncated_spec,
    weyl_spec,
)
from sl12fusion.modules import evaluation, kac_b2, representation_defects, tensor


def _oracle_graded_dims(cm):
    """F(n) = U(g) (F(n-1) + sum_k g(k) F(n-k)), with dense exact subspaces and every generator."""
    mod = cm.module
    n = mod.dim
    mats = {}

    def mat(g, k):
        if (g, k) not in mats:
            mats[(g, k)] = mod.action(g, k).to_dense()
        return mats[(g, k)]

    def close(vecs):
        S = Subspace(n)
        frontier = list(vecs)
        while frontier:
            new = []
            for w in frontier:
                if any(w) and not S.contains(w):
                    S = Subspace(n, S.basis + [w])
                    new.append(w)
            frontier = [matvec_dense(mat(g, 0), w) for w in new for g in BASIS]
        return S

    v = [F(int(i == cm.cyclic_index)) for i in range(n)]
    levels = [close([v])]
    while levels[-1].dim < n:
        m = len(levels)
        seeds = list(levels[-1].basis)
        for k in range(1, m + 1):
            seeds += [matvec_dense(mat(g, k), w) for w in levels[m - k].basis for g in BASIS]
        levels.append(close(seeds))
    return (levels[0].dim,) + tuple(levels[i].dim - levels[i - 1].dim for i in range(1, len(levels)))


@pytest.mark.parametrize("spec", [weyl_spec(F(1), 2), cv_spec(F(0), (2,)), cv_spec(F(3, 2), (1, 1))])
def test_filtration_matches_brute_force_oracle(spec):
    assert fuse(spec).graded_dims == _oracle_graded_dims(fusion_module(spec))


# Frozen from the brute-force oracle above.
@pytest.mark.parametrize(
    "spec,dims",
    [
        (weyl_spec(F(1), 1), (4,)),
        (weyl_spec(F(1), 2), (8, 8)),
        (weyl_spec(F(1, 2), 3), (12, 20, 20, 12)),
        (cv_spec(F(2), (2, 1)), (12, 20)),
        (cv_spec(F(0), (3,)), (12,)),
        (cv_spec(F(0), (1, 1, 1)), (12, 20, 20, 12)),
        (demazure_spec(2, F(1), 3), (12, 20)),
    ],
)
def test_graded_dims(spec, dims):
    assert fuse(spec).graded_dims == dims


@given(
    st.lists(st.integers(1, 2), min_size=1, max_size=3),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=2), min_size=3, max_size=3, unique=True),
)
@settings(max_examples=15)
def test_fusion_invariants(sizes, l1, zs):
    spec = FusionSpec.default(l1, sizes, z=zs[: len(sizes)])
    G = fuse(spec)
    dim = 4 ** len(sizes)
    for m in sizes:
        dim *= m
    assert G.dim == dim
    assert sum(G.graded_dims) == G.dim
    assert G.weight == spec.weight
    assert G.graded_character().ungraded() == G.character() == char_of(fusion_module(spec))
    assert G.level_of(G.cyclic_vector) == 0


def test_levels_and_membership():
    G = fuse(weyl_spec(F(1), 2))
    v = G.cyclic_vector
    w = G.module.action("x3", 1).apply(G.module.action("y2", 0).apply(v))
    assert w
    assert G.level_of(w) == 1
    assert G.contains(w, 1) and not G.contains(w, 0)
    assert G.vanishes_in_gr(G.module.action("y2", 0).apply(v), 1)
    assert not G.vanishes_in_gr(w, 1)


def test_gr_module_is_a_representation():
    G = fuse(cv_spec(F(1), (2, 1)))
    gr = G.graded_module()
    assert gr.dim == G.dim
    assert representation_defects(gr.module, max_degree=2) == []
    assert filtrate(gr).graded_character() == G.graded_character()


def test_positive_degrees_vanish_on_top_level():
    G = fuse(weyl_spec(F(0), 2))
    assert G.operator_vanishes_on_gr("y2", 2)
    assert not G.operator_vanishes_on_gr("y2", 1)


def test_gr_closure_of_the_cyclic_vector():
    G = fuse(weyl_spec(F(1), 2))
    assert G.gr_closure_dim(G.cyclic_vector, 0) == G.dim


def test_not_cyclic():
    k = kac_b2((F(1), 1))
    cm = tensor([evaluation(k, F(0)), evaluation(k, F(0))])
    with pytest.raises(NotCyclicError):
        filtrate(cm)


def test_filtrate_needs_current_module():
    with pytest.raises(ValueError):
        filtrate(kac_b2((F(1), 1)))


@pytest.mark.parametrize(
    "factors",
    [((0, 0, 0),), ((0, 1, 0), (0, 1, 0)), ((0, F(1, 2), 1),)],
)
def test_spec_validation(factors):
    with pytest.raises(ValueError):
        FusionSpec(factors)


def test_default_spec():
    spec = FusionSpec.default(F(3), (2, 1))
    assert spec.factors == ((F(3), 2, F(0)), (F(0), 1, F(1)))
    assert spec.weight == (F(3), F(3))
    with pytest.raises(ValueError):
        FusionSpec.default(1, (1, 1), kappa=(1, 1))
    with pytest.raises(ValueError):
        FusionSpec.default(1, ())
    assert fuse(FusionSpec.default(0, ())).dim == 1


@pytest.mark.parametrize(
    "spec,sizes",
    [
        (demazure_spec(2, 0, 5), (2, 2, 1)),
        (demazure_spec(3, 0, 6), (3, 3)),
        (truncated_spec(2, 0, 5), (3, 2)),
        (truncated_spec(4, 0, 3), (1, 1, 1)),
    ],
)
def test_spec_sizes(spec, sizes):
    assert tuple(m for _, m, _ in spec.factors) == sizes
