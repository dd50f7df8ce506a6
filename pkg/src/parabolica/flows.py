"""Exact holonomy factorization identities in defining matrix representations.

The flow of Z moves the curve ``s -> exp(sX)`` along itself up to a factor
in P:

    exp(tZ) exp(sX) = exp(s/(1+st) X) a_t(s) u_t(s)

with ``a_t(s) = (1+st)^A`` and ``u_t(s) = exp(t/(1+st) Z)``.  The power
``(1+st)^A`` is computed spectrally, never through a logarithm.  Every check
here compares exact matrices and reports the largest entry of the difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg as la
from . import scalars as sc
from .curvature import CurvatureModule, a_eigen_on_W, product_vector
from .lie import exp_nilpotent
from .linalg import Mat
from .models import Family, GradedModel
from .scalars import Ring
from .sl2 import EigenDecomposition, Sl2Triple

GRID = (Fraction(-1, 2), Fraction(1, 2), Fraction(-1), Fraction(1), Fraction(2))
A_SPECTRUM = (-2, -1, 0, 1, 2)


class FlowError(ValueError):
    pass


@dataclass(frozen=True)
class FlowCheck:
    name: str
    model: str
    s: Fraction
    t: Fraction
    v: object = 1
    residual: Fraction = Fraction(0)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual == 0

    def to_json(self) -> dict:
        return {"name": self.name, "model": self.model, "s": str(self.s), "t": str(self.t),
                "v": sc.format_scalar(self.v), "residual": str(self.residual), "passed": self.passed}


def residual(a: Mat, b: Mat) -> Fraction:
    """Largest absolute rational component of ``a - b``."""
    a, b = la._align(a, b)
    diff = a - b
    out = Fraction(0)
    for i in range(diff.rows):
        for j in range(diff.cols):
            for c in sc.components(diff[i, j], diff.ring):
                out = max(out, abs(c))
    return out


# ---------------------------------------------------------------------------
# the 2x2 identity

def sl2_factors(z, w) -> tuple[Mat, tuple[Mat, Mat, Mat]]:
    """Both sides of ``[[1,z],[0,1]] [[1,0],[w,1]] = L D U`` with ``m = 1 + wz``."""
    ring = la._widest((sc.ring_of(z), sc.ring_of(w)))
    z, w = sc.coerce(z, ring), sc.coerce(w, ring)
    one, zero = sc.one(ring), sc.zero(ring)
    m = one + w * z
    if m == zero:
        raise FlowError("1 + wz is not invertible")
    mi = sc.inverse(m)
    lhs = Mat([[one, z], [zero, one]], ring) @ Mat([[one, zero], [w, one]], ring)
    lower = Mat([[one, zero], [w * mi, one]], ring)
    diag = Mat([[m, zero], [zero, mi]], ring)
    upper = Mat([[one, z * mi], [zero, one]], ring)
    return lhs, (lower, diag, upper)


def check_sl2_identity(z, w) -> bool:
    """Exact comparison of the two sides of the SL(2) decomposition.

    Over the quaternions this holds when ``z`` and ``w`` commute, e.g. ``z``
    real, which is how it is used.
    """
    lhs, (lower, diag, upper) = sl2_factors(z, w)
    return lhs == lower @ diag @ upper


# ---------------------------------------------------------------------------
# powers of A

def projectors_of_A(model: GradedModel, triple: Sl2Triple) -> la.SpectralProjectors:
    cache = model._cache.setdefault("projA", {})
    if triple.A not in cache:
        cache[triple.A] = la.spectral_projectors(model.matrix(triple.A), A_SPECTRUM)
    return cache[triple.A]


def power_of_A(model: GradedModel, triple: Sl2Triple, lam) -> Mat:
    """``lam^A = sum lam^mu P_mu`` in the defining representation; checks the group law."""
    lam = Fraction(lam)
    if lam == 0:
        raise FlowError("lam^A needs lam != 0")
    proj = projectors_of_A(model, triple)
    out = proj.apply_power(lam)
    if out @ proj.apply_power(1 / lam) != Mat.identity(out.rows, out.ring):
        raise FlowError("group law lam^A (1/lam)^A = Id fails")
    return out


def holonomy_path(model: GradedModel, triple: Sl2Triple, s, t) -> Mat:
    """``p_t(s) = a_t(s) u_t(s)``."""
    s, t = Fraction(s), Fraction(t)
    lam = 1 + s * t
    if lam == 0:
        raise FlowError("1 + st = 0")
    _, _, z = triple.matrices()
    return power_of_A(model, triple, lam) @ exp_nilpotent(z.scale(t / lam))


def check_holonomy_factorization(model: GradedModel, triple: Sl2Triple, s, t) -> FlowCheck:
    s, t = Fraction(s), Fraction(t)
    lam = 1 + s * t
    if lam == 0:
        raise FlowError("1 + st = 0")
    x, _, z = triple.matrices()
    lhs = exp_nilpotent(z.scale(t)) @ exp_nilpotent(x.scale(s))
    rhs = exp_nilpotent(x.scale(s / lam)) @ holonomy_path(model, triple, s, t)
    return FlowCheck("holonomy_factorization", model.name, s, t, 1, residual(lhs, rhs))


def check_cocycle(model: GradedModel, triple: Sl2Triple, s, t1, t2) -> FlowCheck:
    """``p_{t1+t2}(s) = p_{t2}(s/(1+s t1)) p_{t1}(s)``: composing the flow at t1 then t2."""
    s, t1, t2 = Fraction(s), Fraction(t1), Fraction(t2)
    if 1 + s * t1 == 0 or 1 + s * (t1 + t2) == 0:
        raise FlowError("parameters leave the domain of the factorization")
    s1 = s / (1 + s * t1)
    lhs = holonomy_path(model, triple, s, t1 + t2)
    rhs = holonomy_path(model, triple, s1, t2) @ holonomy_path(model, triple, s, t1)
    return FlowCheck("cocycle", model.name, s, t1, 1, residual(lhs, rhs), {"t2": str(t2)})


# ---------------------------------------------------------------------------
# complex and quaternionic reparametrization

def embed_sl2(model: GradedModel, triple: Sl2Triple, m: Mat, group: bool = True) -> Mat:
    """Image of a 2x2 matrix under the homomorphism induced by the triple.

    Needs the projective-like model ``sl(n+1, K)/p1`` with ``Z`` in the first
    row and ``X`` in the first column, where ``zx = 1``.  Scalars sit between
    the column ``x`` and the row ``z``, so right multiplication ``X c`` is
    respected over the quaternions.
    """
    if model.family is not Family.PROJ_LIKE:
        raise FlowError("the sl(2, K) embedding is implemented for sl(n+1, K)/p1 only")
    zb, xb = model.z_block(triple.Z), model.x_block(triple.X)
    ring = model.ring
    if (zb @ xb) != Mat.identity(1, ring):
        raise FlowError("triple blocks do not satisfy zx = 1")
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    q = zb.cols
    x_c = xb.rscale(c)
    xdz = xb.rscale(d) @ zb
    corner = xdz + (Mat.identity(q, ring) - xb @ zb if group else Mat.zeros(q, q, ring))
    return Mat.block([[Mat([[a]], ring), zb.scale(b)], [x_c, corner]])


def check_reparam_identity(model: GradedModel, triple: Sl2Triple, v, s, t) -> FlowCheck:
    """``exp(tZ) exp(X sv) = exp(X c) a_t(s) u_t(s)`` with ``c = sv (1+stv)^-1``.

    Over C, ``a_t(s) = (1+stv)^A`` spectrally.  Over H the factors are images
    of the 2x2 diagonal and unipotent matrices under the triple's embedding.
    """
    ring = model.ring
    if ring is Ring.RAT:
        raise FlowError("reparametrization with a scalar v needs a complex or quaternionic model")
    s, t = Fraction(s), Fraction(t)
    v = sc.coerce(v, ring)
    one = sc.one(ring)
    m = one + v * (s * t)
    if m == sc.zero(ring):
        raise FlowError("1 + stv is not invertible")
    mi = sc.inverse(m)
    c = v * s * mi
    x, _, z = triple.matrices()
    lhs = exp_nilpotent(z.scale(t)) @ exp_nilpotent(x.rscale(v * s))
    u = exp_nilpotent(z.scale(mi * t))
    if ring is Ring.GAUSS:
        a = projectors_of_A(model, triple).apply_power(m)
    else:
        zero = sc.zero(ring)
        a = embed_sl2(model, triple, Mat([[m, zero], [zero, mi]], ring))
    rhs = exp_nilpotent(x.rscale(c)) @ a @ u
    return FlowCheck("reparam_identity", model.name, s, t, v, residual(lhs, rhs))


# ---------------------------------------------------------------------------
# spectral scaling of eigenvectors

def ad_matrix(model: GradedModel, g: Mat) -> Mat:
    """Matrix of ``Ad(g)`` on g in the model basis."""
    cols = [model.act(g, model.algebra.unit(j)) for j in range(model.dim)]
    return Mat([[cols[j][i] for j in range(model.dim)] for i in range(model.dim)])


@dataclass
class ScalingReport:
    k: int
    vectors: int
    scaled: bool
    bookkeeping: bool

    @property
    def passed(self) -> bool:
        return self.scaled and self.bookkeeping


def eigen_scaling_check(target, triple: Sl2Triple, s, t, k: int, limit: int | None = None) -> ScalingReport:
    """Check ``(1+st)^A v = (1+st)^-k v`` on the (-k)-eigenspace of A.

    ``target`` is either an :class:`EigenDecomposition` of a grading component
    or a :class:`CurvatureModule`.  The bookkeeping check verifies
    ``a^-1 ((s/(1+st))^k v) = s^k v``, the step turning invariance into the
    ``s^k`` law.
    """
    s, t = Fraction(s), Fraction(t)
    lam = 1 + s * t
    if lam <= 0:
        raise FlowError("eigen scaling needs 1 + st > 0")
    if isinstance(target, CurvatureModule):
        model = target.model
        we = a_eigen_on_W(target, triple, verify=False)
        vectors = [product_vector(target, we, a, b, j) for (a, b, j, mu, _) in we.entries if mu == -k]
        act = target.group_action
    elif isinstance(target, EigenDecomposition):
        model = triple.model
        vectors = [{i: x for i, x in enumerate(v) if x} for v in target.space(-k)]

        def act(ad_g, vec):
            out: dict = {}
            for j, c in vec.items():
                la.sparse_add(out, {i: ad_g[i, j] for i in range(ad_g.rows) if ad_g[i, j]}, c)
            return out
    else:
        raise TypeError("target must be a CurvatureModule or EigenDecomposition")
    if limit is not None:
        vectors = vectors[:limit]
    ad_a = ad_matrix(model, power_of_A(model, triple, lam))
    ad_a_inv = ad_matrix(model, power_of_A(model, triple, 1 / lam))
    factor = lam ** (-k)
    scaled = all(act(ad_a, v) == la.sparse_scale(v, factor) for v in vectors)
    shrink = (s / lam) ** k
    book = all(act(ad_a_inv, la.sparse_scale(v, shrink)) == la.sparse_scale(v, s ** k) for v in vectors)
    return ScalingReport(k, len(vectors), scaled, book)


# ---------------------------------------------------------------------------
# batches

def grid_pairs(grid: Sequence = GRID) -> list[tuple[Fraction, Fraction]]:
    return [(s, t) for s, t in product(grid, grid) if s * t != -1]


def holonomy_grid(model: GradedModel, triple: Sl2Triple, grid: Sequence = GRID) -> list[FlowCheck]:
    return [check_holonomy_factorization(model, triple, s, t) for s, t in grid_pairs(grid)]


def sl2_identity_grid(zs: Sequence, ws: Sequence | None = None) -> list[tuple]:
    """Failures of the 2x2 identity over all pairs with ``1 + wz`` invertible."""
    bad = []
    for z, w in product(zs, zs if ws is None else ws):
        ring = la._widest((sc.ring_of(z), sc.ring_of(w)))
        if sc.coerce(z, ring) * sc.coerce(w, ring) == -sc.one(ring):
            continue
        if not check_sl2_identity(z, w):
            bad.append((z, w))
    return bad


def sl2_grids() -> dict:
    """5x5 parameter grids ``(z values, w values)`` over Q, Q(i) and H.

    Over H the identity is used with real ``z`` and quaternionic ``w``.
    """
    half = Fraction(1, 2)
    gauss = (sc.I, 1 + sc.I, -sc.I, half + sc.I, sc.Gauss(2, -1))
    quat = (sc.QJ, 1 + sc.QK, sc.QI + sc.QJ, -half + sc.QK, sc.Quat(1, 1, 1, 1))
    return {"Q": (GRID, GRID), "Q(i)": (gauss, gauss), "H": (GRID, quat)}


def reparam_values(ring: Ring) -> tuple:
    if ring is Ring.GAUSS:
        return (sc.I, 1 + sc.I)
    if ring is Ring.QUAT:
        return (sc.QJ, 1 + sc.QK)
    return ()
