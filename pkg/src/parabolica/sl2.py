"""Adapted sl(2)-triples (X, A, Z) with Z in g_1, X in g_-1 and their eigenstructure.

A triple satisfies ``A = [Z, X]``, ``[A, Z] = 2Z`` and ``[A, X] = -2X``.  The
set T(Z) of all partners X of a fixed Z is a torsor under ``exp(g_0^[1])``;
it is represented by one triple plus a basis of ``g_0^[1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg as la
from . import lie
from . import scalars as sc
from .isotropy import IsotropyError, commutant, normal_form, orbit_invariant
from .lie import Vec, vadd, vcomb, vscale, vsub
from .linalg import Mat
from .models import Family, GradedModel, ipq, partner_recipe


class Sl2Error(ValueError):
    pass


ALLOWED = {
    "gm1": (-2, -1, 0),
    "g0": (-1, 0, 1),
    "g1": (0, 1, 2),
    "g": (-2, -1, 0, 1, 2),
}


@dataclass(frozen=True)
class Sl2Triple:
    model: GradedModel
    X: Vec
    A: Vec
    Z: Vec

    def matrices(self) -> tuple[Mat, Mat, Mat]:
        m = self.model
        return m.matrix(self.X), m.matrix(self.A), m.matrix(self.Z)

    def to_json(self) -> dict:
        return {
            "model": self.model.name,
            "X": [str(x) for x in self.X],
            "A": [str(x) for x in self.A],
            "Z": [str(x) for x in self.Z],
        }


def triple_violation(model: GradedModel, z: Vec, x: Vec) -> str:
    """Empty string if (X, [Z,X], Z) is an adapted triple, else the failed relation."""
    if not model.in_component(z, "g1"):
        return "Z not in g_1"
    if not model.in_component(x, "gm1"):
        return "X not in g_-1"
    a = model.bracket(z, x)
    if model.bracket(a, z) != vscale(2, z):
        return "[A,Z] != 2Z"
    if model.bracket(a, x) != vscale(-2, x):
        return "[A,X] != -2X"
    return ""


def ad_cubed_vanishes(model: GradedModel, z: Vec) -> bool:
    alg = model.algebra
    for i in range(alg.dim):
        v = {i: Fraction(1)}
        zs = {k: a for k, a in enumerate(z) if a}
        for _ in range(3):
            v = alg.bracket_sparse(zs, v)
            if not v:
                break
        if v:
            return False
    return True


def make_triple(model: GradedModel, z: Vec, x: Vec) -> Sl2Triple:
    bad = triple_violation(model, z, x)
    if bad:
        raise Sl2Error(f"sl2 relations violated: {bad}")
    return Sl2Triple(model, x, model.bracket(z, x), z)


def is_partner(model: GradedModel, z: Vec, x: Vec) -> bool:
    return not triple_violation(model, z, x)


# ---------------------------------------------------------------------------
# partners

def _recipe_partner_block(model: GradedModel, zb: Mat) -> Mat:
    recipe = partner_recipe(model.family)
    if recipe == "transpose":
        return zb.T
    if recipe == "negate":
        return -zb
    if recipe == "pseudo_inverse_diagonal":
        n = zb.rows
        if any(zb[i, j] for i in range(n) for j in range(n) if i != j):
            raise Sl2Error("pseudo_inverse_diagonal needs a diagonal block")
        return Mat.diag([1 / zb[i, i] if zb[i, i] else 0 for i in range(n)], zb.ring)
    if recipe == "conformal_dual":
        p, q = model.params["p"], model.params["q"]
        form = ipq(p, q)
        norm = (zb @ form @ zb.T)[0, 0]
        if norm:
            return (form @ zb.T).scale(Fraction(2) / norm)
        return zb.T.scale(1 / (zb @ zb.T)[0, 0])
    raise Sl2Error(f"unknown partner recipe {recipe!r}")


def recipe_partner(model: GradedModel, z: Vec) -> Vec:
    """Partner of a reduced form computed from the tabled recipe."""
    return model.from_x_block(_recipe_partner_block(model, model.z_block(z)))


def standard_partner(model: GradedModel, z0: Vec) -> Sl2Triple:
    t = orbit_invariant(model, z0)
    if t.representative != tuple(z0):
        raise Sl2Error("standard_partner expects a stored standard representative")
    return make_triple(model, z0, recipe_partner(model, z0))


def partner_for(model: GradedModel, z: Vec) -> Sl2Triple:
    """Triple for an arbitrary nonzero Z, transported from its normal form."""
    nf = normal_form(model, z)
    x_red = recipe_partner(model, nf.reduced)
    x = model.act(nf.g.inverse(), x_red)
    return make_triple(model, tuple(z), x)


# ---------------------------------------------------------------------------
# eigenspaces

@dataclass
class EigenDecomposition:
    source: str
    component: str
    spaces: dict  # eigenvalue -> list of coordinate vectors

    def dims(self) -> dict:
        return {lam: len(v) for lam, v in sorted(self.spaces.items())}

    def space(self, lam: int) -> list:
        return self.spaces.get(lam, [])

    def basis(self) -> list:
        return [v for lam in sorted(self.spaces) for v in self.spaces[lam]]

    def to_json(self) -> dict:
        return {"source": self.source, "component": self.component, "dims": {str(k): v for k, v in self.dims().items()}}


def eig_adA(model: GradedModel, triple: Sl2Triple, component: str) -> EigenDecomposition:
    """Eigenspaces of ad(A) on a grading component for the theory-given eigenvalues."""
    key = (triple.A, component)
    cache = model._cache.setdefault("eig", {})
    if key in cache:
        return cache[key]
    idx = model.component(component)
    ad = model.algebra.ad(triple.A)
    sub = ad.submatrix(idx, idx)
    ident = Mat.identity(len(idx))
    spaces = {}
    for lam in ALLOWED[component]:
        ker = la.kernel_basis(sub - ident.scale(lam))
        vecs = []
        for k in ker:
            full = [Fraction(0)] * model.dim
            for pos, i in enumerate(idx):
                full[i] = k[pos, 0]
            vecs.append(tuple(full))
        spaces[lam] = vecs
    total = sum(len(v) for v in spaces.values())
    if total != len(idx):
        found = [v for vs in spaces.values() for v in vs]
        witness = next(model.algebra.unit(i) for i in idx if not lie.in_span(model.algebra.unit(i), found))
        raise Sl2Error(
            f"ad(A) on {component} has eigenvalues outside {ALLOWED[component]} or is not diagonalizable; "
            f"vector {[str(a) for a in witness]} is not in the sum of allowed eigenspaces")
    dec = EigenDecomposition("A", component, spaces)
    cache[key] = dec
    return dec


def stable_subspaces(decomp: EigenDecomposition) -> tuple[list, list]:
    stable = [v for lam in sorted(decomp.spaces) if lam <= 0 for v in decomp.spaces[lam]]
    strongly = [v for lam in sorted(decomp.spaces) if lam < 0 for v in decomp.spaces[lam]]
    return stable, strongly


@dataclass
class PropositionReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details, "failures": self.failures[:5]}


def eigen_propositions(model: GradedModel, triple: Sl2Triple) -> list[PropositionReport]:
    """Spectral windows, the inverse isomorphisms and the g_0^[1] structure statements."""
    out = []
    z, x = triple.Z, triple.X
    br = model.bracket
    try:
        dm1 = eig_adA(model, triple, "gm1")
        d0 = eig_adA(model, triple, "g0")
        d1 = eig_adA(model, triple, "g1")
        dg = eig_adA(model, triple, "g")
    except Sl2Error as exc:
        return [PropositionReport("eigenvalue_windows", False, failures=[str(exc)])]
    out.append(PropositionReport("eigenvalue_windows", True, {
        "gm1": dm1.dims(), "g0": d0.dims(), "g1": d1.dims(), "g": dg.dims()}))
    # (a) ad Z : g_-1^[-1] -> g_0^[1] and ad X back, mutually inverse
    fails = []
    for v in dm1.space(-1):
        w = br(z, v)
        if not lie.in_span(w, d0.space(1)) or br(x, w) != v:
            fails.append([str(a) for a in v])
    for u in d0.space(1):
        w = br(x, u)
        if not lie.in_span(w, dm1.space(-1)) or br(z, w) != u:
            fails.append([str(a) for a in u])
    ok = not fails and len(dm1.space(-1)) == len(d0.space(1))
    out.append(PropositionReport("iso_gm1_m1_g0_1", ok, {"dim": len(d0.space(1))}, fails))
    # (b) 1/2 ad(Z)^2 : g_-1^[-2] -> g_1^[2] and 1/2 ad(X)^2 back
    fails = []
    for v in dm1.space(-2):
        w = vscale(Fraction(1, 2), br(z, br(z, v)))
        if not lie.in_span(w, d1.space(2)) or vscale(Fraction(1, 2), br(x, br(x, w))) != v:
            fails.append([str(a) for a in v])
    for u in d1.space(2):
        w = vscale(Fraction(1, 2), br(x, br(x, u)))
        if not lie.in_span(w, dm1.space(-2)) or vscale(Fraction(1, 2), br(z, br(z, w))) != u:
            fails.append([str(a) for a in u])
    ok = not fails and len(dm1.space(-2)) == len(d1.space(2))
    out.append(PropositionReport("iso_gm1_m2_g1_2", ok, {"dim": len(d1.space(2))}, fails))
    # (c) g_-1^[0] = C(Z)
    comm = commutant(model, z)
    out.append(PropositionReport("zero_eigenspace_is_commutant", lie.same_span(comm, dm1.space(0)),
                                 {"dim_C": len(comm)}))
    # (e) g_0^[1] abelian; [z(Z) ∩ g_0, g_0^[1]] inside g_0^[1]
    g01 = d0.space(1)
    abelian = all(lie.is_zero(br(a, b)) for a in g01 for b in g01)
    out.append(PropositionReport("g0_1_abelian", abelian, {"dim": len(g01)}))
    cz0 = model.algebra.centralizer_in(z, model.component_basis("g0"))
    stable = all(lie.in_span(br(c, u), g01) for c in cz0 for u in g01)
    out.append(PropositionReport("g0_1_normalized_by_centralizer", stable, {"dim_centralizer_g0": len(cz0)}))
    # centralizer decomposition z(Z) = g^[2] + g^[1] + (g^[0] ∩ z(Z))
    cz = model.algebra.centralizer(z)
    zero_part = lie.intersect(dg.space(0), cz, model.dim)
    rhs = dg.space(2) + dg.space(1) + zero_part
    out.append(PropositionReport("centralizer_decomposition", lie.same_span(cz, rhs) and len(rhs) == len(cz),
                                 {"dim": len(cz)}))
    # weight bookkeeping of sl(2)-modules
    book = len(dg.space(2)) == len(dg.space(-2)) and len(dg.space(1)) == len(dg.space(-1))
    out.append(PropositionReport("weight_bookkeeping", book, dg.dims()))
    out.append(PropositionReport("ad_Z_cubed_zero", ad_cubed_vanishes(model, z)))
    return out


# ---------------------------------------------------------------------------
# T(Z) as a torsor

def g0_plus(model: GradedModel, triple: Sl2Triple) -> list[Vec]:
    return eig_adA(model, triple, "g0").space(1)


def orbit_element(model: GradedModel, triple: Sl2Triple, u: Vec) -> Vec:
    """``exp(ad U) X = X + [U,X] + 1/2 [U,[U,X]]`` for U in g_0^[1]."""
    if not lie.in_span(u, g0_plus(model, triple)):
        raise Sl2Error("U must lie in g_0^[1]")
    ux = model.bracket(u, triple.X)
    uux = model.bracket(u, ux)
    return vadd(vadd(triple.X, ux), vscale(Fraction(1, 2), uux))


def exp_action(model: GradedModel, u: Vec, y: Vec) -> Vec:
    uy = model.bracket(u, y)
    return vadd(vadd(y, uy), vscale(Fraction(1, 2), model.bracket(u, uy)))


def recover_orbit_parameter(model: GradedModel, triple: Sl2Triple, x2: Vec) -> Vec:
    """The unique U in g_0^[1] with ``orbit_element(U) = X'``."""
    if not is_partner(model, triple.Z, x2):
        raise Sl2Error("precondition violated: X' is not a partner of Z")
    u = vsub(triple.A, model.bracket(triple.Z, x2))
    if not lie.in_span(u, g0_plus(model, triple)):
        raise Sl2Error("recovered U is not in g_0^[1]")
    if orbit_element(model, triple, u) != tuple(x2):
        raise Sl2Error("round trip through T(Z) failed")
    return u


@dataclass
class SpanReport:
    dim_target: int
    rank: int
    rank_without_pair_sums: int
    generators: int

    @property
    def deficiency(self) -> int:
        return self.dim_target - self.rank

    @property
    def full(self) -> bool:
        return self.deficiency == 0

    def to_json(self) -> dict:
        return {"dim_gm1": self.dim_target, "rank": self.rank, "deficiency": self.deficiency,
                "rank_without_pair_sums": self.rank_without_pair_sums, "generators": self.generators}


def span_of_S(model: GradedModel, triple: Sl2Triple) -> SpanReport:
    """Rank of the span of ``exp(U) Y`` for Y in g_-1^[-2] and sampled U in g_0^[1].

    U runs over 0, plus and minus each basis vector of g_0^[1] and the
    pairwise sums of basis vectors; the sums are needed to reach the mixed
    quadratic terms ``[U_i,[U_j,Y]] + [U_j,[U_i,Y]]``.
    """
    us = g0_plus(model, triple)
    ys = eig_adA(model, triple, "gm1").space(-2)
    n = model.dim
    singles = [lie.vzero(n)] + [vscale(s, u) for u in us for s in (1, -1)]
    pairs = [vadd(us[i], us[j]) for i in range(len(us)) for j in range(i + 1, len(us))]
    ech = la.SparseEchelon(track=False)
    count = 0
    for u in singles:
        for y in ys:
            ech.add(la.dense_to_sparse(exp_action(model, u, y)))
            count += 1
    rank_single = ech.rank
    for u in pairs:
        for y in ys:
            ech.add(la.dense_to_sparse(exp_action(model, u, y)))
            count += 1
    return SpanReport(len(model.gm1), ech.rank, rank_single, count)


def quaternionic_split(model: GradedModel, triple: Sl2Triple) -> PropositionReport:
    """``g_-1 = X H ⊕ ker Z`` with ``X H = g_-1^[-2]`` and ``ker Z = g_-1^[-1]``."""
    if model.family is not Family.PROJ_LIKE or model.field != "H":
        raise Sl2Error("quaternionic split applies to the projective model over H")
    xb = model.x_block(triple.X)
    zb = model.z_block(triple.Z)
    xh = [model.from_x_block(xb.rscale(u)) for u in sc.units(model.ring)]
    kernel = []
    # ker Z as a real subspace of g_-1: solve Z x = 0 over the realification
    gm1 = model.component_basis("gm1")
    cols = []
    for v in gm1:
        cols.append(la.flatten(zb @ model.x_block(v)))
    m = Mat([[cols[j][i] for j in range(len(gm1))] for i in range(len(cols[0]))])
    for k in la.kernel_basis(m):
        kernel.append(vcomb(zip(k.column(0), gm1), model.dim))
    dm1 = eig_adA(model, triple, "gm1")
    xh_rank = lie.span_rank(xh)
    ok = (xh_rank == 4 and lie.same_span(xh, dm1.space(-2)) and lie.same_span(kernel, dm1.space(-1))
          and lie.span_rank(xh + kernel) == len(gm1) == xh_rank + len(kernel))
    return PropositionReport("quaternionic_split", ok, {"dim_XH": xh_rank, "dim_kerZ": len(kernel),
                                                        "dim_gm1": len(gm1)})
