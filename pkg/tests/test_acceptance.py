"""Acceptance suite: nine exact criteria over the whole zoo, each with a time budget.

Every criterion prints one PASS/FAIL line with its timing; the lines are also
collected and repeated in the pytest terminal summary.
"""

import time

import pytest

from parabolica import lie
from parabolica.curvature import (build_W, check_kernel_inclusions, eigen_window_report, euler_check,
                                  harmonic_invariance, kostant_report, ss_triviality_report)
from parabolica.flows import (check_holonomy_factorization, check_reparam_identity, grid_pairs, reparam_values,
                              sl2_grids, sl2_identity_grid)
from parabolica.isotropy import commutant, enumerate_types
from parabolica.models import Family, grading_checks, load_zoo
from parabolica.report import isolated_row, maximal_row, torsor_round_trip, verdicts
from parabolica import scalars as sc
from parabolica.sl2 import eig_adA, eigen_propositions, quaternionic_split, span_of_S, standard_partner

ACCEPTANCE_LINES = []


def models():
    return [e.build() for e in load_zoo()]


def triples(model):
    for t in enumerate_types(model):
        yield t, standard_partner(model, t.representative)


class Criterion:
    def __init__(self, number, name, budget):
        self.number, self.name, self.budget = number, name, budget
        self.failures = []
        self.notes = []

    def fail(self, what):
        self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        on_time = elapsed < self.budget
        ok = not self.failures and on_time
        extra = "; ".join(self.notes)
        line = (f"[{'PASS' if ok else 'FAIL'}] criterion {self.number} {self.name}: {elapsed:.2f}s "
                f"(budget {self.budget:g}s){' - ' + extra if extra else ''}")
        if self.failures:
            line += f" - first failure: {self.failures[0]}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert not self.failures, self.failures[:3]
        assert on_time, f"criterion {self.number} took {elapsed:.1f}s, budget {self.budget}s"
        return False


def test_criterion_1_grading():
    with Criterion(1, "grading", 10) as c:
        ms = models()
        for m in ms:
            for r in grading_checks(m):
                if not r.passed:
                    c.fail(f"{m.name}: {r.name}")
        c.notes.append(f"{len(ms)} models")


def test_criterion_2_eigenvalues():
    with Criterion(2, "eigenvalues", 30) as c:
        n = 0
        for m in models():
            for t, tr in triples(m):
                n += 1
                for r in eigen_propositions(m, tr):
                    if not r.passed:
                        c.fail(f"{m.name} {t.label}: {r.name}")
        c.notes.append(f"{n} types")


def test_criterion_3_torsor():
    with Criterion(3, "torsor T(Z)", 60) as c:
        n = 0
        for m in models():
            for t, tr in triples(m):
                res = torsor_round_trip(m, tr, samples=100, seed=n)
                n += 1
                if res["round_trip_failures"] or res["freeness_failures"]:
                    c.fail(f"{m.name} {t.label}")
                if res["dim_g0_plus"] and res["nonzero"] < 50:
                    c.fail(f"{m.name} {t.label}: too few nonzero samples")
        c.notes.append(f"{n} types x 100 samples")


def test_criterion_4_span():
    with Criterion(4, "span of S", 30) as c:
        for m in models():
            for t, tr in triples(m):
                rep = span_of_S(m, tr)
                if not rep.full:
                    c.fail(f"{m.name} {t.label}: rank {rep.rank} of {rep.dim_target}")


def test_criterion_5_kostant():
    with Criterion(5, "Kostant split and Euler", 900) as c:
        for m in models():
            t0 = time.perf_counter()
            module = build_W(m)
            rep = kostant_report(module)
            if not rep.passed:
                c.fail(f"{m.name}: kostant {rep.to_json()}")
            elems = m.component_basis("g0") + [tr.A for _, tr in triples(m)]
            if not harmonic_invariance(module, elems):
                c.fail(f"{m.name}: harmonic module not g_0-invariant")
            eu = euler_check(module)
            if not eu["passed"]:
                c.fail(f"{m.name}: euler {eu}")
            if m.name == "o(5,5)/spin":
                c.notes.append(f"o(5,5) dim W {module.dim} in {time.perf_counter() - t0:.1f}s")


def test_criterion_6_kernels():
    with Criterion(6, "kernel inclusions and windows", 300) as c:
        for m in models():
            module = build_W(m)
            for t, tr in triples(m):
                if not eigen_window_report(module, tr).passed:
                    c.fail(f"{m.name} {t.label}: windows")
                rep = check_kernel_inclusions(module, tr)
                if not rep.passed:
                    c.fail(f"{m.name} {t.label}: {rep.failures[:1]}")


def stated_type_count(model):
    # counts of the classification tables
    f, prm = model.family, model.params
    if f is Family.PROJ_LIKE:
        return 1
    if f is Family.GRASSMANN:
        return prm["p"]
    if f is Family.CONFORMAL:
        return 3 if prm["p"] * prm["q"] else 1
    if f is Family.SPINORIAL:
        return prm["n"] // 2
    n = prm["n"]
    return n if model.field == "C" else n * (n + 3) // 2


def test_criterion_7_tables():
    with Criterion(7, "classification tables", 60) as c:
        tagged = 0
        for m in models():
            types = enumerate_types(m)
            if len(types) != stated_type_count(m):
                c.fail(f"{m.name}: {len(types)} types")
            for t, v in zip(types, verdicts(m, curvature=False)):
                iso, mx = isolated_row(m, t), maximal_row(m, t)
                if iso and v.dim_C != 0:
                    c.fail(f"{m.name} {t.label}: isolated row with dim C = {v.dim_C}")
                if mx and v.dim_gm1_m2 != 1:
                    c.fail(f"{m.name} {t.label}: maximal row with dim g_-1^[-2] = {v.dim_gm1_m2}")
                if ("COR_4_2" in v.applicable_results) != iso or ("COR_4_8" in v.applicable_results) != mx:
                    c.fail(f"{m.name} {t.label}: tags {v.applicable_results}")
                tagged += iso or mx
        c.notes.append(f"{tagged} tagged types")


def test_criterion_8_flows():
    with Criterion(8, "flow identities", 60) as c:
        for ring, (zs, ws) in sl2_grids().items():
            bad = sl2_identity_grid(zs, ws)
            if bad:
                c.fail(f"2x2 identity over {ring}: {bad[0]}")
        points = 0
        for m in models():
            for t, tr in triples(m):
                for s, tt in grid_pairs():
                    points += 1
                    if not check_holonomy_factorization(m, tr, s, tt).passed:
                        c.fail(f"{m.name} {t.label}: holonomy at ({s}, {tt})")
                for v in reparam_values(m.ring):
                    for s, tt in grid_pairs():
                        if 1 + sc.coerce(v, m.ring) * (s * tt) == sc.zero(m.ring):
                            continue
                        points += 1
                        if not check_reparam_identity(m, tr, v, s, tt).passed:
                            c.fail(f"{m.name}: reparametrization v={sc.format_scalar(v)} at ({s}, {tt})")
        c.notes.append(f"{points} exact group identities")


def test_criterion_9_consistency():
    with Criterion(9, "consistency ladder", 30) as c:
        checked = 0
        for m in models():
            module = build_W(m)
            for t, tr in triples(m):
                if commutant(m, t.representative):
                    continue
                checked += 1
                ss = ss_triviality_report(module, tr)
                if ss.dim_W_ss or ss.dim_harmonic_ss:
                    c.fail(f"{m.name} {t.label}: W^ss {ss.dim_W_ss}, harmonic^ss {ss.dim_harmonic_ss}")
            if m.family is Family.PROJ_LIKE and m.field == "H":
                for t, tr in triples(m):
                    rep = quaternionic_split(m, tr)
                    if not rep.passed or rep.details["dim_XH"] != 4:
                        c.fail(f"{m.name}: quaternionic split {rep.details}")
        c.notes.append(f"{checked} types with C(Z) = 0")
