"""Geometric types of isotropies Z in g_1: invariants, representatives, normal forms.

The invariant is the G_0-orbit datum of the matrix block of Z: its rank over
K for sl models, the causal class of the vector for conformal models, the
signature (or complex rank) of the symmetric block for Lagrangean models and
the rank of the skew block for spinorial models.

Normal forms are constructed with rational group elements.  Over Q some orbit
representatives are out of reach (a symmetric block diag(1, 2) is not
rationally congruent to diag(1, 1)), so ``normal_form`` returns the reduced
element it actually reaches together with a flag saying whether it equals the
stored representative.  All later constructions only need the reduced form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from . import lie
from . import scalars as sc
from .lie import Vec
from .linalg import Mat
from .models import Family, GradedModel, ipq
from .scalars import Ring


class IsotropyError(ValueError):
    pass


@dataclass(frozen=True)
class GeometricType:
    family: Family
    field: str
    kind: str            # "rank" | "signature" | "causal"
    invariant: tuple
    representative: Vec

    @property
    def label(self) -> str:
        if self.kind == "rank":
            return f"rank {self.invariant[0]}"
        if self.kind == "signature":
            p, q, r = self.invariant
            return f"signature ({p},{q},{r})"
        return self.invariant[0].lower()

    def key(self) -> tuple:
        return (self.family.value, self.field, self.kind, self.invariant)

    def same_orbit_type(self, other: "GeometricType") -> bool:
        return self.key() == other.key()

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "field": self.field,
            "invariant": {"kind": self.kind, "value": list(self.invariant)},
            "label": self.label,
            "representative": [str(x) for x in self.representative],
        }


@dataclass(frozen=True)
class NormalForm:
    representative: Vec
    g: Mat
    reduced: Vec

    @property
    def exact(self) -> bool:
        return self.reduced == self.representative


# ---------------------------------------------------------------------------
# invariants

def _check_nonzero(model: GradedModel, z: Vec) -> None:
    if lie.is_zero(z):
        raise IsotropyError("isotropy Z must be nonzero")
    if not model.in_component(z, "g1"):
        raise IsotropyError("Z must lie in g_1")


def quadratic_value(model: GradedModel, z: Vec) -> Fraction:
    """``<z, z>`` for the conformal structure of I_{p,q}."""
    zb = model.z_block(z)
    p, q = model.params["p"], model.params["q"]
    return (zb @ ipq(p, q) @ zb.T)[0, 0]


def orbit_invariant(model: GradedModel, z: Vec) -> GeometricType:
    _check_nonzero(model, z)
    kind, inv = _invariant(model, z)
    return GeometricType(model.family, model.field, kind, inv, _representative(model, kind, inv))


def _invariant(model: GradedModel, z: Vec) -> tuple[str, tuple]:
    f = model.family
    if f in (Family.PROJ_LIKE, Family.GRASSMANN):
        return "rank", (la.rank(model.z_block(z)),)
    if f is Family.CONFORMAL:
        v = quadratic_value(model, z)
        return "causal", ("SPACELIKE" if v > 0 else "TIMELIKE" if v < 0 else "NULL",)
    b = model.z_block(z)
    if f is Family.LAGRANGEAN:
        if model.field == "C":
            return "rank", (la.rank(b),)
        _, diag = congruence_diagonalize(b)
        pos = sum(1 for d in diag if d > 0)
        neg = sum(1 for d in diag if d < 0)
        return "signature", (pos, neg, b.rows - pos - neg)
    return "rank", (la.rank(b),)


def _representative(model: GradedModel, kind: str, inv: tuple) -> Vec:
    f = model.family
    ring = model.ring
    if f in (Family.PROJ_LIKE, Family.GRASSMANN):
        p, q = model.params["p"], model.params["q"]
        return model.from_z_block(rank_normal_block(p, q, inv[0], ring))
    if f is Family.CONFORMAL:
        p, q = model.params["p"], model.params["q"]
        m = p + q
        v = [0] * m
        if inv[0] == "SPACELIKE":
            v[0] = 1
        elif inv[0] == "TIMELIKE":
            v[p] = 1
        else:
            v[0] = v[p] = 1
        return model.from_z_block(Mat([v]))
    n = model.params["n"]
    if f is Family.LAGRANGEAN:
        if kind == "rank":
            vals = [1] * inv[0] + [0] * (n - inv[0])
        else:
            vals = [1] * inv[0] + [-1] * inv[1] + [0] * inv[2]
        return model.from_z_block(Mat.diag(vals, ring))
    return model.from_z_block(standard_skew(n, inv[0] // 2))


def rank_normal_block(p: int, q: int, r: int, ring: Ring = Ring.RAT) -> Mat:
    return Mat([[1 if (i == j and i < r) else 0 for j in range(q)] for i in range(p)], ring)


def standard_skew(n: int, ell: int) -> Mat:
    m = [[0] * n for _ in range(n)]
    for k in range(ell):
        m[2 * k][2 * k + 1] = 1
        m[2 * k + 1][2 * k] = -1
    return Mat(m)


def enumerate_types(model: GradedModel) -> list[GeometricType]:
    """All geometric types with their standard representatives."""
    f = model.family
    out = []

    def add(kind, inv):
        out.append(GeometricType(f, model.field, kind, inv, _representative(model, kind, inv)))

    if f in (Family.PROJ_LIKE, Family.GRASSMANN):
        for r in range(1, model.params["p"] + 1):
            add("rank", (r,))
    elif f is Family.CONFORMAL:
        p, q = model.params["p"], model.params["q"]
        if p:
            add("causal", ("SPACELIKE",))
        if q:
            add("causal", ("TIMELIKE",))
        if p and q:
            add("causal", ("NULL",))
    elif f is Family.LAGRANGEAN:
        n = model.params["n"]
        if model.field == "C":
            for r in range(1, n + 1):
                add("rank", (r,))
        else:
            for r in range(1, n + 1):
                for p in range(r, -1, -1):
                    add("signature", (p, r - p, n - r))
    else:
        n = model.params["n"]
        for ell in range(1, n // 2 + 1):
            add("rank", (2 * ell,))
    return out


def expected_type_count(model: GradedModel) -> int:
    """Type counts of the classification tables, stated independently of the enumeration."""
    f = model.family
    if f is Family.PROJ_LIKE:
        return 1
    if f is Family.GRASSMANN:
        return model.params["p"]
    if f is Family.CONFORMAL:
        return 3 if model.params["p"] * model.params["q"] else 1
    n = model.params["n"]
    if f is Family.LAGRANGEAN:
        return n if model.field == "C" else n * (n + 3) // 2
    return n // 2


# ---------------------------------------------------------------------------
# normal forms

def normal_form(model: GradedModel, z: Vec) -> NormalForm:
    """Rational ``g`` in G_0 moving Z to its representative whenever possible.

    ``Ad(g) Z`` is always checked to equal ``reduced``; ``reduced`` equals the
    representative except for square-class obstructions over Q.
    """
    t = orbit_invariant(model, z)
    f = model.family
    if f in (Family.PROJ_LIKE, Family.GRASSMANN):
        g = _normalize_rank(model, z)
    elif f is Family.CONFORMAL:
        g = _normalize_conformal(model, z, t)
    elif f is Family.LAGRANGEAN:
        g = _normalize_symmetric(model, z)
    else:
        g = _normalize_skew(model, z)
    reduced = model.act(g, z)
    if orbit_invariant(model, reduced).key() != t.key():
        raise IsotropyError("normalization changed the orbit invariant")
    return NormalForm(t.representative, g, reduced)


def _block_diag(a: Mat, b: Mat) -> Mat:
    ring = la._widest((a.ring, b.ring))
    return Mat.block([[a.lift(ring), Mat.zeros(a.rows, b.cols, ring)], [Mat.zeros(b.rows, a.cols, ring), b.lift(ring)]])


def _normalize_rank(model: GradedModel, z: Vec) -> Mat:
    """``a Z b^-1 = [[I_r, 0], [0, 0]]`` by row reduction then column moves."""
    zb = model.z_block(z)
    ring = model.ring
    p, q = zb.rows, zb.cols
    aug = [list(zb.row(i)) + list(Mat.identity(p, ring).row(i)) for i in range(p)]
    red, pivots = la._rref(aug, ring, ncols=q)
    a = Mat([row[q:] for row in red], ring)
    r_mat = Mat([row[:q] for row in red], ring)
    r = len(pivots)
    order = list(pivots) + [c for c in range(q) if c not in pivots]
    perm = Mat([[1 if order[j] == i else 0 for j in range(q)] for i in range(q)], ring)
    rp = r_mat @ perm  # [[I_r, F], [0, 0]]
    clear = Mat.identity(q, ring).tolist()
    for i in range(r):
        for j in range(r, q):
            clear[i][j] = -rp[i, j]
    c = perm @ Mat(clear, ring)  # a Z c = normal block
    return _block_diag(a, c.inverse())


def _reflection(v: Mat, form: Mat) -> Mat:
    """Matrix of the reflection ``x -> x - 2<x,v>/<v,v> v`` acting on row vectors."""
    nv = (v @ form @ v.T)[0, 0]
    m = v.cols
    return Mat.identity(m) - (form @ v.T @ v).scale(Fraction(2) / nv)


def _isometry_to(u: Mat, w: Mat, form: Mat, p: int, q: int) -> Mat:
    """Rational isometry ``R`` (acting on rows) with ``u R = w``; needs ``<u,u> = <w,w>``."""
    def ip(a, b):
        return (a @ form @ b.T)[0, 0]

    m = u.cols
    ident = Mat.identity(m)
    if u == w:
        return ident
    if ip(u, u) != 0:
        d = u - w
        if ip(d, d) != 0:
            return _reflection(d, form)
        s = u + w
        return _reflection(s, form) @ _reflection(w, form)
    # both null: pass through a null vector pairing nontrivially with each
    if ip(u, w) != 0:
        return _reflection(u - w, form)
    for i in range(p):
        for j in range(q):
            for sign in (1, -1):
                y = [0] * m
                y[i], y[p + j] = 1, sign
                y = Mat([y])
                if ip(u, y) != 0 and ip(y, w) != 0:
                    return _reflection(u - y, form) @ _reflection(y - w, form)
    raise IsotropyError("no intermediate null vector found")


def _rational_sqrt(x: Fraction):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _normalize_conformal(model: GradedModel, z: Vec, t: GeometricType) -> Mat:
    p, q = model.params["p"], model.params["q"]
    m = p + q
    form = ipq(p, q)
    zb = model.z_block(z)
    rep = model.z_block(t.representative)
    nz = (zb @ form @ zb.T)[0, 0]
    nr = (rep @ form @ rep.T)[0, 0]
    if nz == 0:
        lam = Fraction(1)
        target = rep
    else:
        mu = _rational_sqrt(nz / nr)
        if mu is None:
            return Mat.identity(m + 2)
        lam = 1 / mu
        target = rep.scale(mu)
    # Ad(diag(lam, B, 1/lam)) z = lam * z * B^-1
    r = _isometry_to(zb, target, form, p, q)
    b = r.inverse()
    return Mat.block([
        [Mat([[lam]]), Mat.zeros(1, m), Mat.zeros(1, 1)],
        [Mat.zeros(m, 1), b, Mat.zeros(m, 1)],
        [Mat.zeros(1, 1), Mat.zeros(1, m), Mat([[1 / lam]])],
    ])


def _split_element(h: Mat) -> Mat:
    n = h.rows
    return _block_diag(h, h.inverse().T)


class _Congruence:
    """Working copy of a square block under ``m -> e m e^t`` with ``h`` tracking ``e``."""

    def __init__(self, b: Mat):
        self.ring = b.ring
        self.m = b.tolist()
        self.h = Mat.identity(b.rows, b.ring).tolist()
        self.n = b.rows

    def add(self, target: int, src: int, coef) -> None:
        if not coef:
            return
        m, h = self.m, self.h
        m[target] = [x + coef * y for x, y in zip(m[target], m[src])]
        for row in m:
            row[target] = row[target] + row[src] * coef
        h[target] = [x + coef * y for x, y in zip(h[target], h[src])]

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        m, h = self.m, self.h
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]
        h[i], h[j] = h[j], h[i]

    def scale(self, i: int, coef) -> None:
        m, h = self.m, self.h
        m[i] = [coef * x for x in m[i]]
        for row in m:
            row[i] = row[i] * coef
        h[i] = [coef * x for x in h[i]]

    def result(self) -> tuple[Mat, Mat]:
        return Mat(self.h, self.ring), Mat(self.m, self.ring)


def congruence_diagonalize(b: Mat) -> tuple[Mat, list]:
    """``h`` with ``h b h^t`` diagonal for symmetric ``b``; returns ``(h, diagonal)``."""
    w = _Congruence(b)
    n = w.n
    for k in range(n):
        m = w.m
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][i]), None)
            if piv is None:
                pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j]), None)
                if pair is None:
                    break
                i, j = pair
                w.add(i, j, 1)  # diagonal entry becomes 2 m_ij
                piv = i
            w.swap(k, piv)
        m = w.m
        inv = sc.inverse(m[k][k])
        for i in range(k + 1, n):
            if m[i][k]:
                w.add(i, k, -(m[i][k] * inv))
    h, d = w.result()
    return h, [d[i, i] for i in range(n)]


def _gauss_sqrt(x):
    """Square root in Q(i) when it exists."""
    g = sc.coerce(x, Ring.GAUSS)
    a, b = g.re, g.im
    r = _rational_sqrt(a * a + b * b)
    if r is None:
        return None
    re = _rational_sqrt((a + r) / 2)
    if re is None:
        return None
    if re:
        return sc.Gauss(re, b / (2 * re))
    im = _rational_sqrt(-a)
    return None if im is None else sc.Gauss(0, im)


def _normalize_symmetric(model: GradedModel, z: Vec) -> Mat:
    b = model.z_block(z)
    n = b.rows
    h, diag = congruence_diagonalize(b)
    complex_case = model.field == "C"
    # order: positive, negative, zero (real); nonzero, zero (complex)
    if complex_case:
        key = [0 if d else 1 for d in diag]
    else:
        key = [0 if d > 0 else 1 if d < 0 else 2 for d in diag]
    order = sorted(range(n), key=lambda i: (key[i], i))
    scale = []
    for i in order:
        d = diag[i]
        s = None
        if d:
            if complex_case:
                root = _gauss_sqrt(d)
                s = None if root is None else sc.inverse(root)
            else:
                root = _rational_sqrt(abs(d))
                s = None if root is None else 1 / root
        scale.append(s if s is not None else 1)
    ring = model.ring
    perm_scaled = Mat([[scale[r] if order[r] == c else 0 for c in range(n)] for r in range(n)], ring)
    return _split_element(perm_scaled @ h)


def _normalize_skew(model: GradedModel, z: Vec) -> Mat:
    b = model.z_block(z)
    w = _Congruence(b)
    n = w.n
    k = 0
    while k + 1 < n:
        m = w.m
        pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j]), None)
        if pair is None:
            break
        i, j = pair
        w.swap(k, i)  # j > i >= k, so position j is untouched
        w.swap(k + 1, j)
        m = w.m
        w.scale(k + 1, 1 / m[k][k + 1])
        m = w.m
        for r in range(k + 2, n):
            a, c = m[r][k], m[r][k + 1]
            w.add(r, k, -c)
            w.add(r, k + 1, a)
            m = w.m
        k += 2
    h, _ = w.result()
    return _split_element(h)


# ---------------------------------------------------------------------------
# commutant

def commutant(model: GradedModel, z: Vec) -> list[Vec]:
    """Basis of ``C(Z) = {X in g_-1 : [Z, X] = 0}``."""
    _check_nonzero(model, z)
    return model.algebra.centralizer_in(z, model.component_basis("gm1"))
