import json
import random

import pytest
from hypothesis import given, strategies as st

from parabolica import lie
from parabolica.linalg import Mat
from parabolica.models import (Family, ModelError, build_model, grading_checks, load_zoo, pairing_matrix,
                               verify_block_brackets)

from conftest import SMALL_IDS, zoo_model


def test_zoo_has_thirteen_models():
    zoo = load_zoo()
    assert len(zoo) == 13
    assert len({e.id for e in zoo}) == 13
    for e in zoo:
        assert e.build().name == e.id


@pytest.mark.parametrize("model_id", SMALL_IDS + ["sl(3,C)/p1"])
def test_grading_checks_pass(model_id):
    reports = grading_checks(zoo_model(model_id))
    assert [r.name for r in reports if not r.passed] == []


def test_dims_of_families():
    assert build_model("GRASSMANN", "R", n=3, p=2).dims == (4, 7, 4)
    assert build_model("PROJ_LIKE", "H", n=2).dims == (8, 19, 8)
    assert build_model("CONFORMAL", "R", p=1, q=2).dims == (3, 4, 3)
    assert build_model("LAGRANGEAN", "R", n=3).dims == (6, 9, 6)
    assert build_model("LAGRANGEAN", "C", n=2).dims == (6, 8, 6)


def test_grassmann_with_p_one_is_projective():
    m = build_model("GRASSMANN", "R", n=2, p=1)
    assert m.family is Family.PROJ_LIKE


@pytest.mark.parametrize("family, field, params", [
    ("GRASSMANN", "R", {"n": 1, "p": 1}),
    ("GRASSMANN", "R", {"n": 3, "p": 3}),
    ("CONFORMAL", "R", {"p": 1, "q": 1}),
    ("CONFORMAL", "C", {"p": 1, "q": 2}),
    ("LAGRANGEAN", "H", {"n": 2}),
    ("LAGRANGEAN", "R", {"n": 1}),
    ("SPINORIAL", "R", {"n": 4}),
    ("PROJ_LIKE", "X", {"n": 2}),
])
def test_invalid_parameters_rejected(family, field, params):
    with pytest.raises((ModelError, ValueError)):
        build_model(family, field, **params)


def test_block_bracket_formulas():
    for model_id, formula in (("sl(4,R)/p2", "[Z,X] = (ZX, -XZ)"), ("o(2,3)", "I(XZ)")):
        rep = verify_block_brackets(zoo_model(model_id))
        assert rep.passed and formula in rep.details["formula"]


def test_pairing_is_nondegenerate():
    for model_id in SMALL_IDS:
        m = zoo_model(model_id)
        from parabolica.linalg import rank
        assert rank(pairing_matrix(m)) == m.dims[0]


@pytest.mark.parametrize("model_id", ["sl(4,R)/p2", "o(3,3)", "sp(4,R)", "sl(3,H)/p1"])
@given(seed=st.integers(0, 10 ** 6))
def test_g0_action_preserves_grading_and_brackets(model_id, seed):
    m = zoo_model(model_id)
    rng = random.Random(seed)
    g = m.random_g0(rng)
    i, j = rng.choice(m.g1), rng.choice(m.gm1)
    zi, xj = m.algebra.unit(i), m.algebra.unit(j)
    az, ax = m.act(g, zi), m.act(g, xj)
    assert m.in_component(az, "g1") and m.in_component(ax, "gm1")
    assert m.act(g, m.bracket(zi, xj)) == m.bracket(az, ax)


def test_zoo_env_override(tmp_path, monkeypatch):
    from parabolica.models import zoo_path
    src = json.loads(open(zoo_path(), encoding="utf-8").read())
    src["models"] = src["models"][:2]
    path = tmp_path / "zoo.json"
    path.write_text(json.dumps(src))
    monkeypatch.setenv("PARABOLICA_ZOO", str(path))
    assert len(load_zoo()) == 2


def test_zoo_without_recipes_rejected(tmp_path):
    from parabolica.models import load_zoo_config, zoo_path
    src = json.loads(open(zoo_path(), encoding="utf-8").read())
    del src["partners"]["CONFORMAL"]
    path = tmp_path / "zoo.json"
    path.write_text(json.dumps(src))
    with pytest.raises(ModelError, match="partner recipe"):
        load_zoo_config(str(path))


def test_grading_element_is_central_in_g0():
    m = zoo_model("o(3,4)")
    for i in m.g0:
        assert lie.is_zero(m.bracket(m.E, m.algebra.unit(i)))
