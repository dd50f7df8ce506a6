"""Verdicts, verification suites and table rendering for the command line.

A verdict collects, for one model and one geometric type, the commutant
dimension, the spectrum of A on g_-1 and the harmonic curvature dimensions,
and cites the rigidity results whose algebraic hypotheses are met.  Tags
encode verified hypotheses, not flatness of any geometry.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import lie
from .curvature import (build_W, check_kernel_inclusions, eigen_window_report, euler_check, harmonic_invariance,
                        harmonic_module, kostant_report, ss_triviality_report)
from .flows import (check_cocycle, check_reparam_identity, eigen_scaling_check, grid_pairs, holonomy_grid,
                    reparam_values)
from .isotropy import GeometricType, commutant, enumerate_types, expected_type_count
from .models import Family, GradedModel, ModelError, build_model, grading_checks, load_zoo
from .sl2 import (Sl2Error, eig_adA, eigen_propositions, g0_plus, is_partner, orbit_element,
                  quaternionic_split, recover_orbit_parameter, span_of_S, standard_partner)

SCHEMA_VERSION = 1
TAGS = ("COR_4_2", "COR_4_8", "THM_CPROJ", "THM_QUAT", "THM_GRASS_2N", "NONE")
SUITES = ("grading", "sl2", "kostant", "kernels", "flows")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# model specs

def parse_model_spec(tokens) -> GradedModel:
    """Build a model from ``sl N K pP``, ``o A B``, ``o N N spin``, ``sp 2N K`` or a zoo id."""
    tokens = list(tokens)
    if not tokens:
        raise UsageError("missing model spec")
    if len(tokens) == 1:
        for entry in load_zoo():
            if entry.id == tokens[0]:
                return entry.build()
        raise UsageError(f"unknown zoo id {tokens[0]!r}")
    head, rest = tokens[0].lower(), tokens[1:]
    try:
        if head == "sl" and len(rest) == 3:
            size, fld, p = int(rest[0]), rest[1].upper(), int(rest[2].lower().lstrip("p"))
            return build_model(Family.GRASSMANN, fld, n=size - 1, p=p)
        if head == "o" and len(rest) == 2:
            a, b = int(rest[0]), int(rest[1])
            return build_model(Family.CONFORMAL, "R", p=a - 1, q=b - 1)
        if head == "o" and len(rest) == 3 and rest[2].lower() == "spin":
            a, b = int(rest[0]), int(rest[1])
            if a != b:
                raise UsageError("spinorial models are o(n,n)")
            return build_model(Family.SPINORIAL, "R", n=a)
        if head == "sp" and len(rest) == 2:
            size, fld = int(rest[0]), rest[1].upper()
            if size % 2:
                raise UsageError("sp(2n) needs an even size")
            return build_model(Family.LAGRANGEAN, fld, n=size // 2)
    except ModelError as exc:
        raise UsageError(f"cannot build {' '.join(tokens)}: {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"malformed model spec {' '.join(tokens)!r}: {exc}") from exc
    raise UsageError(f"malformed model spec {' '.join(tokens)!r}")


# ---------------------------------------------------------------------------
# citation rows

def isolated_row(model: GradedModel, t: GeometricType) -> bool:
    """(model, type) matches a row of the smoothly-isolated-zero corollary."""
    f, prm = model.family, model.params
    if f is Family.PROJ_LIKE:
        return prm["n"] >= 2
    if f is Family.GRASSMANN:
        p, q = prm["p"], prm["n"] + 1 - prm["p"]
        return 2 <= p <= q and t.invariant[0] == p
    if f is Family.CONFORMAL:
        if prm["p"] * prm["q"] == 0:
            return True
        return t.invariant[0] in ("SPACELIKE", "TIMELIKE")
    if f is Family.LAGRANGEAN:
        n = prm["n"]
        rank = t.invariant[0] if t.kind == "rank" else t.invariant[0] + t.invariant[1]
        return n >= 3 and rank == n
    n = prm["n"]
    return n >= 5 and t.invariant[0] == (n if n % 2 == 0 else n - 1)


def maximal_row(model: GradedModel, t: GeometricType) -> bool:
    """(model, type) matches a row of the maximal-commutant corollary."""
    f, prm = model.family, model.params
    if f is Family.GRASSMANN:
        p, q = prm["p"], prm["n"] + 1 - prm["p"]
        return model.field == "R" and 2 <= p <= q and t.invariant[0] == 1
    if f is Family.CONFORMAL:
        return prm["p"] * prm["q"] != 0 and t.invariant[0] == "NULL"
    if f is Family.LAGRANGEAN:
        return model.field == "R" and prm["n"] >= 3 and t.invariant[0] + t.invariant[1] == 1
    if f is Family.SPINORIAL:
        return prm["n"] >= 5 and t.invariant[0] == 2
    return False


@dataclass
class Verdict:
    model: str
    type: str
    invariant: dict
    dim_C: int
    gm1_eigen: dict
    smoothly_isolated: bool
    maximal_commutant: bool
    applicable_results: list
    curvature: dict = field(default_factory=dict)

    @property
    def dim_gm1_m2(self) -> int:
        return self.gm1_eigen.get(-2, 0)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "type": self.type,
            "invariant": self.invariant,
            "dim_C": self.dim_C,
            "gm1_eigen": {str(k): v for k, v in sorted(self.gm1_eigen.items())},
            "dim_gm1_m2": self.dim_gm1_m2,
            "smoothly_isolated": self.smoothly_isolated,
            "maximal_commutant": self.maximal_commutant,
            "applicable_results": list(self.applicable_results),
            "curvature": self.curvature,
        }


def _harmonic_by_homogeneity(model: GradedModel) -> dict:
    module = build_W(model)
    out = {1: 0, 2: 0, 3: 0}
    for h in harmonic_module(module):
        out[module.homogeneity_of(next(iter(h)))] += 1
    return out


def curvature_summary(model: GradedModel) -> dict:
    module = build_W(model)
    return {"dim_W": module.dim, "dims_W": dict(sorted(module.component_dims().items())),
            "dim_harmonic": len(harmonic_module(module)), "dims_harmonic": _harmonic_by_homogeneity(model)}


def verdicts(model: GradedModel, curvature: bool = True) -> list[Verdict]:
    types = enumerate_types(model)
    rows = []
    for t in types:
        triple = standard_partner(model, t.representative)
        dim_c = len(commutant(model, t.representative))
        eig = eig_adA(model, triple, "gm1").dims()
        ss = ss_triviality_report(build_W(model), triple).to_json() if curvature else {}
        rows.append((t, triple, dim_c, eig, ss))
    max_c = max(r[2] for r in rows)
    out = []
    for t, triple, dim_c, eig, ss in rows:
        tags = []
        if isolated_row(model, t):
            tags.append("COR_4_2")
        if maximal_row(model, t) and eig.get(-2, 0) == 1:
            tags.append("COR_4_8")
        if model.family is Family.PROJ_LIKE and model.field == "C":
            tags.append("THM_CPROJ")
        if model.family is Family.PROJ_LIKE and model.field == "H" and quaternionic_split(model, triple).passed:
            tags.append("THM_QUAT")
        if model.family is Family.GRASSMANN and model.field == "R" and model.params["p"] == 2:
            tags.append("THM_GRASS_2N")
        cur = {}
        if curvature:
            cur = {"dim_W_ss": ss["dim_W_ss"], "dim_harmonic_ss": ss["dim_harmonic_ss"],
                   "harmonic_eigen": ss["harmonic_eigen"]}
        out.append(Verdict(model.name, t.label, t.to_json()["invariant"], dim_c, eig, dim_c == 0,
                           dim_c == max_c, tags or ["NONE"], cur))
    return out


# ---------------------------------------------------------------------------
# rendering

def _cell(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def _eig_cell(eig: dict) -> str:
    return " ".join(f"{k}:{v}" for k, v in sorted(eig.items()))


def report_data(models, curvature: bool = True) -> dict:
    out = []
    for model in models:
        rows = verdicts(model, curvature)
        entry = {"id": model.name, "dims": list(model.dims), "types": len(rows),
                 "expected_types": expected_type_count(model), "verdicts": [v.to_json() for v in rows]}
        if curvature:
            entry["curvature"] = curvature_summary(model)
        out.append(entry)
    return {"schema_version": SCHEMA_VERSION, "models": out}


def render_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"


def render_markdown(data: dict) -> str:
    lines = []
    for m in data["models"]:
        lines.append(f"## {m['id']}")
        lines.append("")
        d = m["dims"]
        lines.append(f"dims g_-1, g_0, g_1: {d[0]}, {d[1]}, {d[2]}; types: {m['types']}")
        if "curvature" in m:
            c = m["curvature"]
            hd = c["dims_harmonic"]
            lines.append(f"dim W = {c['dim_W']}; dim harmonic = {c['dim_harmonic']} "
                         f"(W1 {hd[1]}, W2 {hd[2]}, W3 {hd[3]})")
        lines.append("")
        lines.append("| type | dim C | g_-1 eigen | isolated | maximal C | harmonic ss | results |")
        lines.append("|---|---|---|---|---|---|---|")
        for v in m["verdicts"]:
            eig = {int(k): n for k, n in v["gm1_eigen"].items()}
            hss = v["curvature"].get("dim_harmonic_ss", "-")
            lines.append(f"| {v['type']} | {v['dim_C']} | {_eig_cell(eig)} | {_cell(v['smoothly_isolated'])} "
                         f"| {_cell(v['maximal_commutant'])} | {hss} | {', '.join(v['applicable_results'])} |")
        lines.append("")
    return "\n".join(lines)


CSV_FIELDS = ("model", "type", "dim_C", "dim_gm1_m2", "gm1_eigen", "smoothly_isolated", "maximal_commutant",
              "applicable_results")


def render_csv(data: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for m in data["models"]:
        for v in m["verdicts"]:
            eig = {int(k): n for k, n in v["gm1_eigen"].items()}
            writer.writerow([v["model"], v["type"], v["dim_C"], v["dim_gm1_m2"], _eig_cell(eig),
                             int(v["smoothly_isolated"]), int(v["maximal_commutant"]),
                             ";".join(v["applicable_results"])])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# verification suites

@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    seconds: float
    details: dict = field(default_factory=dict)
    counterexample: object = None

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed, "seconds": round(self.seconds, 3),
               "details": self.details}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def _triples(model: GradedModel):
    for t in enumerate_types(model):
        yield t, standard_partner(model, t.representative)


def suite_grading(model: GradedModel) -> list[CheckResult]:
    out = []
    with _Timer() as tm:
        reports = grading_checks(model)
    for r in reports:
        out.append(CheckResult("grading", r.name, r.passed, tm.seconds / len(reports), r.details,
                               r.failures[:1] or None))
    return out


def random_g0_plus(model: GradedModel, triple, rng: random.Random):
    basis = g0_plus(model, triple)
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in basis]
    return lie.vcomb(zip(coeffs, basis), model.dim)


def torsor_round_trip(model: GradedModel, triple, samples: int = 100, seed: int = 0) -> dict:
    """Round trip U -> X' -> U on random rational U, and X' != X for U != 0."""
    rng = random.Random(seed)
    bad, free_bad, nonzero = [], [], 0
    for _ in range(samples):
        u = random_g0_plus(model, triple, rng)
        x2 = orbit_element(model, triple, u)
        if not is_partner(model, triple.Z, x2):
            bad.append([str(a) for a in u])
            continue
        try:
            back = recover_orbit_parameter(model, triple, x2)
        except Sl2Error:
            bad.append([str(a) for a in u])
            continue
        if back != u:
            bad.append([str(a) for a in u])
        if not lie.is_zero(u):
            nonzero += 1
            if x2 == triple.X:
                free_bad.append([str(a) for a in u])
    return {"samples": samples, "nonzero": nonzero, "round_trip_failures": bad, "freeness_failures": free_bad,
            "dim_g0_plus": len(g0_plus(model, triple))}


def suite_sl2(model: GradedModel, samples: int = 100) -> list[CheckResult]:
    out = []
    for t, triple in _triples(model):
        with _Timer() as tm:
            reports = eigen_propositions(model, triple)
        for r in reports:
            out.append(CheckResult("sl2", f"{t.label}: {r.name}", r.passed, tm.seconds / len(reports), r.details,
                                   r.failures[:1] or None))
        with _Timer() as tm:
            tr = torsor_round_trip(model, triple, samples)
        ok = not tr["round_trip_failures"] and not tr["freeness_failures"]
        first = (tr["round_trip_failures"] + tr["freeness_failures"])[:1] or None
        out.append(CheckResult("sl2", f"{t.label}: torsor", ok, tm.seconds,
                               {k: v for k, v in tr.items() if not k.endswith("failures")}, first))
        with _Timer() as tm:
            sp = span_of_S(model, triple)
        out.append(CheckResult("sl2", f"{t.label}: span_of_S", sp.full, tm.seconds, sp.to_json(),
                               None if sp.full else sp.to_json()))
        if model.family is Family.PROJ_LIKE and model.field == "H":
            with _Timer() as tm:
                qs = quaternionic_split(model, triple)
            out.append(CheckResult("sl2", f"{t.label}: quaternionic_split", qs.passed, tm.seconds, qs.details))
    return out


def suite_kostant(model: GradedModel) -> list[CheckResult]:
    module = build_W(model)
    out = []
    with _Timer() as tm:
        kr = kostant_report(module)
    out.append(CheckResult("kostant", "kostant_split", kr.passed, tm.seconds, kr.to_json(),
                           None if kr.passed else kr.to_json()))
    with _Timer() as tm:
        inv = harmonic_invariance(module, [model.algebra.unit(i) for i in model.g0])
    out.append(CheckResult("kostant", "harmonic_g0_invariance", inv, tm.seconds, {"elements": len(model.g0)}))
    with _Timer() as tm:
        eu = euler_check(module)
    details = {k: {str(a): b for a, b in v.items()} if isinstance(v, dict) else v for k, v in eu.items()}
    out.append(CheckResult("kostant", "euler_characteristic", eu["passed"], tm.seconds, details,
                           None if eu["passed"] else details))
    return out


def suite_kernels(model: GradedModel) -> list[CheckResult]:
    module = build_W(model)
    out = []
    for t, triple in _triples(model):
        with _Timer() as tm:
            ew = eigen_window_report(module, triple)
        out.append(CheckResult("kernels", f"{t.label}: W_eigen_windows", ew.passed, tm.seconds, ew.details,
                               ew.failures[:1] or None))
        with _Timer() as tm:
            ki = check_kernel_inclusions(module, triple)
        out.append(CheckResult("kernels", f"{t.label}: kernel_inclusions", ki.passed, tm.seconds, ki.details,
                               ki.failures[:1] or None))
        with _Timer() as tm:
            ss = ss_triviality_report(module, triple)
        out.append(CheckResult("kernels", f"{t.label}: strongly_stable", ss.consistent, tm.seconds, ss.to_json()))
    return out


def suite_flows(model: GradedModel) -> list[CheckResult]:
    out = []
    for t, triple in _triples(model):
        with _Timer() as tm:
            grid = holonomy_grid(model, triple)
        bad = [c.to_json() for c in grid if not c.passed]
        out.append(CheckResult("flows", f"{t.label}: holonomy_factorization", not bad, tm.seconds,
                               {"points": len(grid)}, bad[:1] or None))
        with _Timer() as tm:
            coc = [check_cocycle(model, triple, s, t1, Fraction(1, 2)) for s, t1 in grid_pairs()
                   if 1 + s * (t1 + Fraction(1, 2)) != 0]
        bad = [c.to_json() for c in coc if not c.passed]
        out.append(CheckResult("flows", f"{t.label}: cocycle", not bad, tm.seconds, {"points": len(coc)},
                               bad[:1] or None))
        for v in reparam_values(model.ring):
            with _Timer() as tm:
                checks = [check_reparam_identity(model, triple, v, s, t1) for s, t1 in grid_pairs()]
            bad = [c.to_json() for c in checks if not c.passed]
            out.append(CheckResult("flows", f"{t.label}: reparam v={checks[0].to_json()['v']}", not bad, tm.seconds,
                                   {"points": len(checks)}, bad[:1] or None))
        with _Timer() as tm:
            results = []
            for comp in ("gm1", "g0", "g1"):
                dec = eig_adA(model, triple, comp)
                for k in range(-2, 3):
                    results.append((comp, k, eigen_scaling_check(dec, triple, 1, 1, k)))
            module = build_W(model)
            for k in (-1, 0, 1, 2):
                results.append(("W", k, eigen_scaling_check(module, triple, 1, 1, k, limit=40)))
        bad = [f"{c} k={k}" for c, k, r in results if not r.passed]
        out.append(CheckResult("flows", f"{t.label}: eigen_scaling", not bad, tm.seconds,
                               {"checks": len(results)}, bad[:1] or None))
    return out


SUITE_FUNCS = {"grading": suite_grading, "sl2": suite_sl2, "kostant": suite_kostant, "kernels": suite_kernels,
               "flows": suite_flows}


def run_suites(model: GradedModel, suite: str) -> list[CheckResult]:
    if suite == "all":
        names = SUITES
    elif suite in SUITE_FUNCS:
        names = (suite,)
    else:
        raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    out = []
    for name in names:
        out.extend(SUITE_FUNCS[name](model))
    return out


def verify_report(model: GradedModel, results: list[CheckResult]) -> dict:
    failed = [r for r in results if not r.passed]
    data = {"schema_version": SCHEMA_VERSION, "model": model.name, "dims": list(model.dims),
            "passed": not failed, "checks": [r.to_json() for r in results]}
    if failed:
        data["first_failure"] = failed[0].to_json()
    return data
