from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from parabolica import scalars as sc
from parabolica.curvature import build_W
from parabolica.flows import (FlowError, check_cocycle, check_holonomy_factorization, check_reparam_identity,
                              check_sl2_identity, eigen_scaling_check, embed_sl2, grid_pairs, holonomy_path,
                              power_of_A, reparam_values, sl2_factors, sl2_grids, sl2_identity_grid)
from parabolica.lie import exp_nilpotent
from parabolica.linalg import Mat
from parabolica.sl2 import eig_adA

from conftest import ZOO_IDS, typed_triples, zoo_model

half = Fraction(1, 2)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_sl2_identity_examples():
    lhs, (lower, diag, upper) = sl2_factors(0, 0)
    assert lhs == lower == diag == upper == Mat.identity(2)
    lhs, factors = sl2_factors(1, 1)
    assert lhs == Mat([[2, 1], [1, 1]])
    assert factors[1] == Mat.diag([2, half])
    assert check_sl2_identity(sc.I, 1 + sc.I)
    assert check_sl2_identity(2, sc.QJ)
    with pytest.raises(FlowError):
        sl2_factors(1, -1)


def test_sl2_identity_fails_for_noncommuting_quaternions():
    assert not check_sl2_identity(sc.QI, sc.QJ)
    assert sl2_identity_grid((sc.QI, sc.QJ)) != []


def test_sl2_grids_are_five_by_five_and_pass():
    for name, (zs, ws) in sl2_grids().items():
        assert len(zs) == len(ws) == 5
        assert sl2_identity_grid(zs, ws) == [], name


@given(rationals, rationals, rationals, rationals)
def test_sl2_identity_gaussian_property(a, b, c, d):
    z, w = sc.Gauss(a, b), sc.Gauss(c, d)
    if sc.one(sc.Ring.GAUSS) + w * z != 0:
        assert check_sl2_identity(z, w)


@given(rationals, rationals, rationals, rationals, rationals)
def test_sl2_identity_real_z_quaternion_w(z, a, b, c, d):
    w = sc.Quat(a, b, c, d)
    if 1 + w * z != sc.zero(sc.Ring.QUAT):
        assert check_sl2_identity(z, w)


def test_power_of_A():
    m = zoo_model("sl(3,R)/p1")
    t, triple = typed_triples(m)[0]
    assert power_of_A(m, triple, 1) == Mat.identity(3)
    x, _, z = triple.matrices()
    two = power_of_A(m, triple, 2)
    inv = power_of_A(m, triple, half)
    assert two @ two == power_of_A(m, triple, 4)
    assert two @ z @ inv == z.scale(4)
    assert two @ x @ inv == x.scale(Fraction(1, 4))
    assert two @ power_of_A(m, triple, half) == Mat.identity(3)
    with pytest.raises(FlowError):
        power_of_A(m, triple, 0)


def test_holonomy_special_points():
    m = zoo_model("sl(4,R)/p2")
    for t, triple in typed_triples(m):
        x, _, z = triple.matrices()
        assert holonomy_path(m, triple, 5, 0) == Mat.identity(4)
        assert check_holonomy_factorization(m, triple, 1, 1).passed
        with pytest.raises(FlowError):
            check_holonomy_factorization(m, triple, 1, -1)


def test_grid_excludes_singular_pairs():
    pairs = grid_pairs()
    assert len(pairs) == 21
    assert all(s * t != -1 for s, t in pairs)


@pytest.mark.parametrize("model_id", ZOO_IDS)
def test_holonomy_factorization_sample(model_id):
    m = zoo_model(model_id)
    for t, triple in typed_triples(m):
        assert check_holonomy_factorization(m, triple, -half, -2).passed
        assert check_cocycle(m, triple, 1, half, 2).passed


@pytest.mark.parametrize("model_id", ["sl(3,R)/p1", "o(2,3)", "sp(4,R)"])
@given(s=rationals, t=rationals)
def test_holonomy_factorization_property(model_id, s, t):
    m = zoo_model(model_id)
    if 1 + s * t == 0:
        return
    for _, triple in typed_triples(m):
        assert check_holonomy_factorization(m, triple, s, t).residual == 0


@given(s=rationals, t1=rationals, t2=rationals)
def test_cocycle_property(s, t1, t2):
    m = zoo_model("sl(4,R)/p2")
    if 1 + s * t1 == 0 or 1 + s * (t1 + t2) == 0:
        return
    for _, triple in typed_triples(m):
        assert check_cocycle(m, triple, s, t1, t2).passed


@pytest.mark.parametrize("model_id", ["sl(3,C)/p1", "sl(3,H)/p1"])
def test_reparametrization(model_id):
    m = zoo_model(model_id)
    (t, triple), = typed_triples(m)
    for v in reparam_values(m.ring) + (1,):
        for s, tt in grid_pairs():
            if 1 + sc.coerce(v, m.ring) * (s * tt) == sc.zero(m.ring):
                continue
            assert check_reparam_identity(m, triple, v, s, tt).passed, (v, s, tt)


def test_reparametrization_errors():
    m = zoo_model("sl(3,C)/p1")
    (t, triple), = typed_triples(m)
    with pytest.raises(FlowError):
        check_reparam_identity(m, triple, 1, 1, -1)
    r = zoo_model("sl(3,R)/p1")
    with pytest.raises(FlowError):
        check_reparam_identity(r, typed_triples(r)[0][1], 1, 1, 1)


def test_embedding_reproduces_triple():
    m = zoo_model("sl(3,H)/p1")
    (t, triple), = typed_triples(m)
    x, a, z = triple.matrices()
    ring = m.ring
    o, n = sc.one(ring), sc.zero(ring)
    assert embed_sl2(m, triple, Mat([[n, o], [n, n]], ring), group=False) == z
    assert embed_sl2(m, triple, Mat([[n, n], [o, n]], ring), group=False) == x
    assert embed_sl2(m, triple, Mat([[o, n], [n, -o]], ring), group=False) == a
    u = Mat([[o, sc.QJ], [n, o]], ring)
    assert embed_sl2(m, triple, u) == exp_nilpotent(z.scale(sc.QJ))
    with pytest.raises(FlowError):
        embed_sl2(zoo_model("o(2,3)"), typed_triples(zoo_model("o(2,3)"))[0][1], u)


@pytest.mark.parametrize("model_id", ["sl(4,R)/p2", "o(3,4)", "sp(4,R)"])
def test_eigen_scaling(model_id):
    m = zoo_model(model_id)
    w = build_W(m)
    for _, triple in typed_triples(m):
        for comp in ("gm1", "g0", "g1"):
            dec = eig_adA(m, triple, comp)
            for k in range(-2, 3):
                assert eigen_scaling_check(dec, triple, 2, half, k).passed
        for k in (-1, 0, 1, 2):
            assert eigen_scaling_check(w, triple, half, 1, k, limit=20).passed


def test_eigen_scaling_needs_positive_base():
    m = zoo_model("sl(3,R)/p1")
    _, triple = typed_triples(m)[0]
    with pytest.raises(FlowError):
        eigen_scaling_check(eig_adA(m, triple, "gm1"), triple, 1, -2, 1)


def _sl2_model():
    from parabolica.lie import LieAlgebra
    from parabolica.models import GradedModel
    x, a, z = Mat([[0, 0], [1, 0]]), Mat.diag([1, -1]), Mat([[0, 1], [0, 0]])
    alg = LieAlgebra.from_basis([x, a, z], name="sl(2,Q)")
    return GradedModel(family=None, field="R", params={}, name="sl(2,Q)", algebra=alg,
                       E=alg.coords(Mat.diag([half, -half])), gm1=[0], g0=[1], g1=[2], blocks=None)


def test_sl2_power_and_holonomy_examples():
    from parabolica.sl2 import make_triple
    m = _sl2_model()
    triple = make_triple(m, m.algebra.unit(2), m.algebra.unit(0))
    assert power_of_A(m, triple, 2) == Mat.diag([2, half])
    x, _, z = triple.matrices()
    lhs = exp_nilpotent(z) @ exp_nilpotent(x)
    assert lhs == exp_nilpotent(x.scale(half)) @ Mat.diag([2, half]) @ exp_nilpotent(z.scale(half))
    assert check_holonomy_factorization(m, triple, 1, 1).passed
    assert holonomy_path(m, triple, 3, 0) == Mat.identity(2)


def test_eigen_scaling_k_zero_fixes_vectors():
    m = zoo_model("sl(4,R)/p2")
    t, triple = typed_triples(m)[0]
    rep = eigen_scaling_check(eig_adA(m, triple, "gm1"), triple, 3, 2, 0)
    assert rep.passed and rep.vectors == 1
