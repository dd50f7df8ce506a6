"""Regenerate the frozen golden records under src/parabolica/data/golden.

Values marked ``sympy`` are recomputed here with sympy's own exact
elimination and must agree with the package before anything is written;
values marked ``trace_form`` compare the Killing pairing against the
textbook multiple of the trace form.  Run from the repository root:

    python3 tools/make_golden.py [--max-w N]
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from sympy import QQ, Quaternion
from sympy.polys.matrices import DomainMatrix

from parabolica import scalars as sc
from parabolica.cli import golden_name
from parabolica.curvature import build_W, euler_check, harmonic_module, kostant_report
from parabolica.isotropy import commutant, enumerate_types
from parabolica.linalg import Mat, rank
from parabolica.models import Family, load_zoo, pairing_matrix
from parabolica.report import curvature_summary
from parabolica.sl2 import eig_adA, standard_partner

OUT = Path(__file__).resolve().parent.parent / "src" / "parabolica" / "data" / "golden"

# Killing form = c * Re tr(xy) on the defining representation
def trace_constant(model):
    N = model.size
    if model.family in (Family.PROJ_LIKE, Family.GRASSMANN):
        return {"R": 2 * N, "C": 4 * N, "H": 8 * N}[model.field]
    if model.family in (Family.CONFORMAL, Family.SPINORIAL):
        return N - 2
    return N + 2


def sympy_rank(columns, nrows):
    """Rank of a sparse column list with sympy's sparse DomainMatrix over QQ."""
    if not columns:
        return 0
    rows: dict = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = QQ(v.numerator, v.denominator)
    return DomainMatrix(rows, (nrows, len(columns)), QQ).rank()


def oracle_ranks(module):
    out = {}
    for k in (1, 2, 3):
        cols = [module.boundary_basis(j, k) for j in range(module.size(k))]
        out[str(k)] = sympy_rank(cols, module.size(k - 1))
    offset = module.size(1)
    stacked = []
    for j in range(module.size(2)):
        col = dict(module.boundary_basis(j, 2))
        for i, v in module.differential_basis(j, 2).items():
            col[offset + i] = v
        stacked.append(col)
    harmonic = module.size(2) - sympy_rank(stacked, module.size(1) + module.size(3))
    return out, harmonic


def killing_record(model):
    pm = pairing_matrix(model)
    c = trace_constant(model)
    ok = True
    for a, i in enumerate(model.g1):
        for b, j in enumerate(model.gm1):
            tr = (model.algebra.basis[i] @ model.algebra.basis[j]).trace()
            real = sc.components(tr, model.ring)[0]
            if pm[a, b] != c * real:
                ok = False
    return {"pairing": [[str(pm[a, b]) for b in range(pm.cols)] for a in range(pm.rows)],
            "killing_over_trace": c, "trace_form_agrees": ok}


def model_record(entry, max_w):
    model = entry.build()
    types = []
    for t in enumerate_types(model):
        tr = standard_partner(model, t.representative)
        types.append({"label": t.label, "dim_C": len(commutant(model, t.representative)),
                      "gm1_eigen": {str(k): v for k, v in eig_adA(model, tr, "gm1").dims().items()}})
    module = build_W(model)
    kr = kostant_report(module)
    eu = euler_check(module)
    cur = curvature_summary(model)
    record = {
        "id": entry.id,
        "dims": list(model.dims),
        "dim": model.dim,
        "killing": killing_record(model),
        "types": types,
        "curvature": {
            "dim_W": cur["dim_W"],
            "dims_W": {str(k): v for k, v in cur["dims_W"].items()},
            "rank_boundary": {str(k): v for k, v in kr.rank_boundary.items()},
            "dim_harmonic": cur["dim_harmonic"],
            "dims_harmonic": {str(k): v for k, v in cur["dims_harmonic"].items()},
            "harmonic_by_degree": {str(k): v for k, v in eu["harmonic"].items()},
        },
        "oracle": {"killing": "trace_form", "curvature": "internal"},
    }
    if not record["killing"]["trace_form_agrees"]:
        raise SystemExit(f"{entry.id}: Killing pairing disagrees with the trace form")
    if module.dim <= max_w:
        ranks, harmonic = oracle_ranks(module)
        if ranks != record["curvature"]["rank_boundary"] or harmonic != record["curvature"]["dim_harmonic"]:
            raise SystemExit(f"{entry.id}: sympy oracle disagrees: {ranks} {harmonic}")
        record["oracle"]["curvature"] = "sympy"
    return record


QUAT_CASES = {
    "i j / k -1": [["i", "j"], ["k", "-1"]],
    "1 i / j -k": [["1", "i"], ["j", "-k"]],
    "i 0 j / 0 k 1 / i k j+1": [["i", "0", "j"], ["0", "k", "1"], ["i", "k", "1+j"]],
    "1 i j / i -1 k / j -k -1": [["1", "i", "j"], ["i", "-1", "k"], ["j", "-k", "-1"]],
}


def _sympy_quat(text):
    x = sc.coerce(sc.parse_scalar(text), sc.Ring.QUAT)
    a, b, c, d = sc.components(x, sc.Ring.QUAT)
    return Quaternion(a, b, c, d)


def quaternion_rank_oracle(rows):
    """Rank over H as (rank of left-multiplication realification) / 4, all in sympy."""
    units = [Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)]
    n, m = len(rows), len(rows[0])
    big = [[QQ(0)] * (4 * m) for _ in range(4 * n)]
    for i, row in enumerate(rows):
        for j, text in enumerate(row):
            q = _sympy_quat(text)
            for b, u in enumerate(units):
                prod = q * u
                for a, comp in enumerate((prod.a, prod.b, prod.c, prod.d)):
                    big[4 * i + a][4 * j + b] = QQ(int(comp.p), int(comp.q))
    r = DomainMatrix(big, (4 * n, 4 * m), QQ).rank()
    if r % 4:
        raise SystemExit("realified quaternion rank not divisible by 4")
    return r // 4


def linalg_record():
    out = {}
    for name, rows in QUAT_CASES.items():
        expected = quaternion_rank_oracle(rows)
        got = rank(Mat([[sc.parse_scalar(t) for t in r] for r in rows], sc.Ring.QUAT))
        if got != expected:
            raise SystemExit(f"quaternion rank mismatch on {name}: {got} vs {expected}")
        out[name] = {"rows": rows, "rank": expected}
    return {"quaternion_rank": out, "oracle": "sympy left-multiplication realification"}


def write(path, data):
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def main(argv=None):
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-w", type=int, default=3000, help="largest dim W cross-checked with sympy")
    args = parser.parse_args(argv)
    OUT.mkdir(parents=True, exist_ok=True)
    write(OUT / "linalg.json", linalg_record())
    for entry in load_zoo():
        rec = model_record(entry, args.max_w)
        write(OUT / golden_name(entry.id), rec)
        print(entry.id, rec["oracle"]["curvature"], file=sys.stderr)


if __name__ == "__main__":
    main()
