import random

import pytest
from hypothesis import given, strategies as st

from parabolica.isotropy import (IsotropyError, commutant, congruence_diagonalize, enumerate_types,
                                 expected_type_count, normal_form, orbit_invariant)
from parabolica.linalg import Mat
from parabolica.models import Family
from parabolica import lie

from conftest import ZOO_IDS, zoo_model

FIELD_DIM = {"R": 1, "C": 2, "H": 4}


def random_g1(model, rng):
    while True:
        z = lie.vcomb([(rng.randint(-2, 2), b) for b in model.component_basis("g1")], model.dim)
        if not lie.is_zero(z):
            return z


@pytest.mark.parametrize("model_id", ZOO_IDS)
def test_type_counts(model_id):
    m = zoo_model(model_id)
    types = enumerate_types(m)
    assert len(types) == expected_type_count(m)
    assert len({t.key() for t in types}) == len(types)
    for t in types:
        assert orbit_invariant(m, t.representative).key() == t.key()


def test_table_counts_by_hand():
    assert len(enumerate_types(zoo_model("o(3,4)"))) == 3
    assert len(enumerate_types(zoo_model("sp(6,R)"))) == 9
    assert len(enumerate_types(zoo_model("o(5,5)/spin"))) == 2
    assert [t.label for t in enumerate_types(zoo_model("sl(4,R)/p2"))] == ["rank 1", "rank 2"]


@pytest.mark.parametrize("model_id", ["sl(4,R)/p2", "sl(3,C)/p1", "o(3,3)", "o(2,4)", "sp(6,R)", "o(5,5)/spin"])
@given(seed=st.integers(0, 10 ** 6))
def test_invariant_constant_on_orbits(model_id, seed):
    m = zoo_model(model_id)
    rng = random.Random(seed)
    z = random_g1(m, rng)
    g = m.random_g0(rng)
    assert orbit_invariant(m, m.act(g, z)).key() == orbit_invariant(m, z).key()


@pytest.mark.parametrize("model_id", ["sl(4,R)/p2", "sl(5,R)/p2", "sl(3,H)/p1", "o(3,4)", "sp(6,R)", "o(5,5)/spin"])
@given(seed=st.integers(0, 10 ** 6))
def test_normal_form_moves_to_reduced(model_id, seed):
    m = zoo_model(model_id)
    z = random_g1(m, random.Random(seed))
    nf = normal_form(m, z)
    assert m.act(nf.g, z) == nf.reduced
    assert orbit_invariant(m, nf.reduced).key() == orbit_invariant(m, z).key()
    if m.family is not Family.LAGRANGEAN and m.family is not Family.CONFORMAL:
        assert nf.exact


def test_square_class_obstruction_is_flagged():
    m = zoo_model("sp(4,R)")
    z = m.from_z_block(Mat.diag([1, 2]))
    nf = normal_form(m, z)
    assert orbit_invariant(m, z).invariant == (2, 0, 0)
    assert m.act(nf.g, z) == nf.reduced


def test_zero_isotropy_rejected():
    m = zoo_model("sl(3,R)/p1")
    with pytest.raises(IsotropyError):
        orbit_invariant(m, lie.vzero(m.dim))
    with pytest.raises(IsotropyError):
        orbit_invariant(m, m.component_basis("gm1")[0])


@pytest.mark.parametrize("model_id", ["sl(3,R)/p1", "sl(4,R)/p1", "sl(4,R)/p2", "sl(5,R)/p2", "sl(3,C)/p1",
                                      "sl(3,H)/p1"])
def test_commutant_dim_matches_rank_formula(model_id):
    # C(Z) = {X : ZX = 0, XZ = 0} has K-dimension (p - r)(q - r)
    m = zoo_model(model_id)
    p, q = m.params["p"], m.params["q"]
    for t in enumerate_types(m):
        r = t.invariant[0]
        assert len(commutant(m, t.representative)) == (p - r) * (q - r) * FIELD_DIM[m.field]


def test_conformal_commutants():
    # [Z, X] = 0 forces X proportional to the dual of Z and then <Z, Z> = 0
    m = zoo_model("o(3,4)")
    dims = {t.label: len(commutant(m, t.representative)) for t in enumerate_types(m)}
    assert dims == {"spacelike": 0, "timelike": 0, "null": 1}


@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
def test_congruence_diagonalize(entries):
    a = Mat([entries[0:3], entries[3:6], entries[6:9]])
    b = a + a.T
    p, diag = congruence_diagonalize(b)
    assert p @ b @ p.T == Mat.diag(diag)


def test_normal_form_examples():
    m = zoo_model("sl(4,R)/p2")
    z = m.from_z_block(Mat([[0, 1], [0, 0]]))
    nf = normal_form(m, z)
    assert nf.exact and nf.reduced == m.from_z_block(Mat([[1, 0], [0, 0]]))
    assert m.act(nf.g, z) == nf.reduced
    lag = zoo_model("sp(4,R)")
    z = lag.from_z_block(Mat.diag([1, -4]))
    nf = normal_form(lag, z)
    assert nf.exact and nf.reduced == lag.from_z_block(Mat.diag([1, -1]))
    std = enumerate_types(m)[0].representative
    assert normal_form(m, std).reduced == std


def test_commutant_examples():
    m = zoo_model("sl(4,R)/p2")
    (x,) = commutant(m, m.from_z_block(Mat([[1, 0], [0, 0]])))
    xb = m.x_block(x)
    assert [[xb[i, j] != 0 for j in range(2)] for i in range(2)] == [[False, False], [False, True]]
    conf = zoo_model("o(2,3)")
    dims = {t.label: len(commutant(conf, t.representative)) for t in enumerate_types(conf)}
    assert dims == {"spacelike": 0, "timelike": 0, "null": 1}
    proj = zoo_model("sl(3,C)/p1")
    assert all(not commutant(proj, t.representative) for t in enumerate_types(proj))
