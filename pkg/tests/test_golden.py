"""Recompute each zoo model and compare with the frozen records in data/golden.

The records were produced by tools/make_golden.py, which cross-checks the
curvature ranks and harmonic dimensions with sympy's sparse elimination over
QQ and the Killing pairing with the trace form before writing.
"""

import json

import pytest

from parabolica.cli import golden_dir, golden_name
from parabolica.curvature import build_W, euler_check, kostant_report
from parabolica.isotropy import commutant, enumerate_types
from parabolica.linalg import Mat, rank
from parabolica.models import pairing_matrix
from parabolica.report import curvature_summary
from parabolica.scalars import parse_scalar
from parabolica.sl2 import eig_adA, standard_partner

from conftest import ZOO_IDS, zoo_model


def golden(model_id):
    return json.loads((golden_dir() / golden_name(model_id)).read_text())


def keyed(d):
    return {str(k): v for k, v in d.items()}


@pytest.mark.parametrize("model_id", ZOO_IDS)
def test_structure_matches_golden(model_id):
    g = golden(model_id)
    m = zoo_model(model_id)
    assert list(m.dims) == g["dims"] and m.dim == g["dim"]
    pm = pairing_matrix(m)
    assert [[str(pm[a, b]) for b in range(pm.cols)] for a in range(pm.rows)] == g["killing"]["pairing"]
    assert g["killing"]["trace_form_agrees"]
    types = []
    for t in enumerate_types(m):
        tr = standard_partner(m, t.representative)
        types.append({"label": t.label, "dim_C": len(commutant(m, t.representative)),
                      "gm1_eigen": keyed(eig_adA(m, tr, "gm1").dims())})
    assert types == g["types"]


@pytest.mark.parametrize("model_id", ZOO_IDS)
def test_curvature_matches_golden(model_id):
    g = golden(model_id)["curvature"]
    m = zoo_model(model_id)
    module = build_W(m)
    cur = curvature_summary(m)
    assert cur["dim_W"] == g["dim_W"]
    assert keyed(cur["dims_W"]) == g["dims_W"]
    assert keyed(kostant_report(module).rank_boundary) == g["rank_boundary"]
    assert cur["dim_harmonic"] == g["dim_harmonic"]
    assert keyed(cur["dims_harmonic"]) == g["dims_harmonic"]
    assert keyed(euler_check(module)["harmonic"]) == g["harmonic_by_degree"]


def test_golden_oracles_recorded():
    for model_id in ZOO_IDS:
        assert golden(model_id)["oracle"] == {"killing": "trace_form", "curvature": "sympy"}


def test_quaternion_ranks_match_golden():
    data = json.loads((golden_dir() / "linalg.json").read_text())
    for case in data["quaternion_rank"].values():
        m = Mat([[parse_scalar(x) for x in row] for row in case["rows"]])
        assert rank(m) == case["rank"]
