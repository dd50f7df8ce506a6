"""|1|-graded simple Lie algebras in matrix form.

Four families are realized in their defining representations, always with a
diagonal grading element so that the grading components are coordinate
subspaces of the chosen basis, which is ordered as g_{-1}, g_0, g_1.

* ``PROJ_LIKE`` / ``GRASSMANN``: sl(p+q, K), K in {R, C, H}, block matrices
  ``[[A, Z], [X, B]]`` with Z the p x q upper right block.
* ``CONFORMAL``: o(p+1, q+1) preserving ``J = antidiag(1, I_{p,q}, 1)``.
* ``LAGRANGEAN``: sp(2n, K), K in {R, C}, for ``[[0, I], [-I, 0]]``.
* ``SPINORIAL``: o(n, n) for ``[[0, I], [I, 0]]``.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Sequence

from . import linalg as la
from . import lie
from . import scalars as sc
from .lie import LieAlgebra, Vec
from .linalg import Mat
from .scalars import Ring


class Family(str, Enum):
    PROJ_LIKE = "PROJ_LIKE"
    GRASSMANN = "GRASSMANN"
    CONFORMAL = "CONFORMAL"
    LAGRANGEAN = "LAGRANGEAN"
    SPINORIAL = "SPINORIAL"


class ModelError(ValueError):
    pass


PARTNER_RECIPES = ("transpose", "conformal_dual", "pseudo_inverse_diagonal", "negate")


@dataclass
class BlockMaps:
    """Identification of the grading components with matrix spaces."""

    z_block: Callable[[Mat], Mat]      # defining matrix of g_1 element -> block
    x_block: Callable[[Mat], Mat]      # defining matrix of g_-1 element -> block
    z_matrix: Callable[[Mat], Mat]     # block -> defining matrix
    x_matrix: Callable[[Mat], Mat]
    g0_blocks: Callable[[Mat], tuple]  # defining matrix of g_0 element -> blocks
    bracket: Callable[[Mat, Mat], tuple]  # block formula for [Z, X] in g_0 blocks
    formula: str


@dataclass
class GradedModel:
    family: Family
    field: str
    params: dict
    name: str
    algebra: LieAlgebra
    E: Vec
    gm1: list[int]
    g0: list[int]
    g1: list[int]
    blocks: BlockMaps
    form: Mat | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self) -> Ring:
        return Ring.from_field(self.field)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def size(self) -> int:
        return self.algebra.size

    @property
    def dims(self) -> tuple[int, int, int]:
        return (len(self.gm1), len(self.g0), len(self.g1))

    def component(self, name: str) -> list[int]:
        return {"gm1": self.gm1, "g0": self.g0, "g1": self.g1, "g": list(range(self.dim))}[name]

    def component_basis(self, name: str) -> list[Vec]:
        return [self.algebra.unit(i) for i in self.component(name)]

    def grade_of(self, index: int) -> int:
        if index in self._grades:
            return self._grades[index]
        raise IndexError(index)

    @property
    def _grades(self) -> dict:
        g = self._cache.get("grades")
        if g is None:
            g = {i: -1 for i in self.gm1}
            g.update({i: 0 for i in self.g0})
            g.update({i: 1 for i in self.g1})
            self._cache["grades"] = g
        return g

    def in_component(self, x: Vec, name: str) -> bool:
        allowed = set(self.component(name))
        return all(not a or i in allowed for i, a in enumerate(x))

    def matrix(self, x: Vec) -> Mat:
        return self.algebra.to_matrix(x)

    def coords(self, m: Mat) -> Vec:
        return self.algebra.coords(m)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        return self.algebra.bracket(x, y)

    def z_block(self, x: Vec) -> Mat:
        return self.blocks.z_block(self.matrix(x))

    def x_block(self, x: Vec) -> Mat:
        return self.blocks.x_block(self.matrix(x))

    def from_z_block(self, b: Mat) -> Vec:
        return self.coords(self.blocks.z_matrix(b))

    def from_x_block(self, b: Mat) -> Vec:
        return self.coords(self.blocks.x_matrix(b))

    def act(self, g: Mat, x: Vec) -> Vec:
        """Adjoint action ``Ad(g) x = g x g^-1`` of a defining-rep group element."""
        return self.coords(g @ self.matrix(x) @ g.inverse())

    def killing(self) -> Mat:
        return self.algebra.killing()

    @property
    def id(self) -> str:
        return self.name

    def __repr__(self):
        return f"GradedModel({self.name}, dims={self.dims})"

    def __hash__(self):
        return hash(self.name)

    def __eq__(self, other):
        return isinstance(other, GradedModel) and other.name == self.name

    # G_0 sampling ------------------------------------------------------------
    def random_g0(self, rng: random.Random) -> Mat:
        """A random element of G_0 in the defining representation."""
        f = self.family
        if f in (Family.PROJ_LIKE, Family.GRASSMANN):
            p, q = self.params["p"], self.params["q"]
            a = _random_invertible(p, self.ring, rng)
            b = _random_invertible(q, self.ring, rng)
            return Mat.block([[a, Mat.zeros(p, q, self.ring)], [Mat.zeros(q, p, self.ring), b]])
        if f is Family.CONFORMAL:
            p, q = self.params["p"], self.params["q"]
            m = p + q
            lam = Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2, 3])) * rng.choice([1, -1])
            b = random_orthogonal(p, q, rng)
            one = Mat([[lam]])
            return Mat.block([
                [one, Mat.zeros(1, m), Mat.zeros(1, 1)],
                [Mat.zeros(m, 1), b, Mat.zeros(m, 1)],
                [Mat.zeros(1, 1), Mat.zeros(1, m), Mat([[1 / lam]])],
            ])
        n = self.params["n"]
        h = _random_invertible(n, self.ring, rng)
        return Mat.block([[h, Mat.zeros(n, n, self.ring)], [Mat.zeros(n, n, self.ring), h.inverse().T]])


def _random_scalar(ring: Ring, rng: random.Random):
    parts = [Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2, 3])) for _ in range(ring.degree)]
    return sc.from_components(parts, ring)


def _random_invertible(n: int, ring: Ring, rng: random.Random) -> Mat:
    while True:
        m = Mat([[_random_scalar(ring, rng) for _ in range(n)] for _ in range(n)], ring)
        if la.rank(m) == n:
            return m


def ipq(p: int, q: int) -> Mat:
    return Mat.diag([1] * p + [-1] * q)


def random_orthogonal(p: int, q: int, rng: random.Random) -> Mat:
    """Random rational element of O(p, q): Cayley transform times a reflection."""
    m = p + q
    form = ipq(p, q)
    while True:
        k = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                v = Fraction(rng.randint(-2, 2), rng.choice([1, 2, 3]))
                k[i][j], k[j][i] = v, -v
        s = form @ Mat(k)  # s^t I + I s = 0
        ident = Mat.identity(m)
        if la.rank(ident - s) == m:
            b = (ident - s).inverse() @ (ident + s)
            break
    if rng.random() < 0.5:
        i = rng.randrange(m)
        refl = [[Fraction(int(r == c)) for c in range(m)] for r in range(m)]
        refl[i][i] = Fraction(-1)
        b = b @ Mat(refl)
    return b


# ---------------------------------------------------------------------------
# family constructions

def _units(ring: Ring):
    return sc.units(ring)


def _build_sl(n: int, p: int, fld: str) -> tuple:
    ring = Ring.from_field(fld)
    N = n + 1
    q = N - p
    units = _units(ring)
    imag = units[1:]

    def unit(i, j, u=1):
        return Mat.unit(N, N, i, j, u, ring)

    gm1, g0, g1 = [], [], []
    for b in range(q):
        for a in range(p):
            for u in units:
                gm1.append(unit(p + b, a, u))
    blocks = [range(p), range(p, N)]
    for blk in blocks:
        for i in blk:
            for j in blk:
                if i != j:
                    for u in units:
                        g0.append(unit(i, j, u))
    for i in range(N - 1):
        g0.append(unit(i, i) - unit(i + 1, i + 1))
    if ring is Ring.GAUSS:
        for i in range(N - 1):
            g0.append(unit(i, i, sc.I) - unit(i + 1, i + 1, sc.I))
    elif ring is Ring.QUAT:
        for i in range(N):
            for u in imag:
                g0.append(unit(i, i, u))
    for a in range(p):
        for b in range(q):
            for u in units:
                g1.append(unit(a, p + b, u))
    e = Mat.diag([Fraction(q, N)] * p + [Fraction(-p, N)] * q, ring)

    def z_matrix(z):
        return Mat.block([[Mat.zeros(p, p, ring), z.lift(ring)], [Mat.zeros(q, p, ring), Mat.zeros(q, q, ring)]])

    def x_matrix(x):
        return Mat.block([[Mat.zeros(p, p, ring), Mat.zeros(p, q, ring)], [x.lift(ring), Mat.zeros(q, q, ring)]])

    maps = BlockMaps(
        z_block=lambda m: m.submatrix(range(p), range(p, N)),
        x_block=lambda m: m.submatrix(range(p, N), range(p)),
        z_matrix=z_matrix,
        x_matrix=x_matrix,
        g0_blocks=lambda m: (m.submatrix(range(p), range(p)), m.submatrix(range(p, N), range(p, N))),
        bracket=lambda z, x: (z @ x, -(x @ z)),
        formula="[Z,X] = (ZX, -XZ)",
    )
    family = Family.PROJ_LIKE if p == 1 else Family.GRASSMANN
    name = f"sl({N},{fld})/p{p}"
    return family, name, {"n": n, "p": p, "q": q}, ring, gm1, g0, g1, e, maps, None


def _build_conformal(p: int, q: int) -> tuple:
    m = p + q
    N = m + 2
    form_i = ipq(p, q)
    J = [[Fraction(0)] * N for _ in range(N)]
    J[0][N - 1] = J[N - 1][0] = Fraction(1)
    for i in range(m):
        J[1 + i][1 + i] = form_i[i, i]
    J = Mat(J)

    def z_matrix(z):
        out = [[Fraction(0)] * N for _ in range(N)]
        iz = form_i @ z.T
        for i in range(m):
            out[0][1 + i] = z[0, i]
            out[1 + i][N - 1] = -iz[i, 0]
        return Mat(out)

    def x_matrix(x):
        out = [[Fraction(0)] * N for _ in range(N)]
        xi = x.T @ form_i
        for i in range(m):
            out[1 + i][0] = x[i, 0]
            out[N - 1][1 + i] = -xi[0, i]
        return Mat(out)

    gm1 = [x_matrix(Mat.unit(m, 1, i, 0)) for i in range(m)]
    g0 = [Mat.diag([1] + [0] * m + [-1])]
    for i in range(m):
        for j in range(i + 1, m):
            a = [[Fraction(0)] * N for _ in range(N)]
            a[1 + i][1 + j] = form_i[i, i]
            a[1 + j][1 + i] = -form_i[j, j]
            g0.append(Mat(a))
    g1 = [z_matrix(Mat.unit(1, m, 0, i)) for i in range(m)]
    e = g0[0]

    def bracket(z, x):
        xz = x @ z
        return (z @ x, -xz + form_i @ xz.T @ form_i)

    maps = BlockMaps(
        z_block=lambda M: M.submatrix([0], range(1, m + 1)),
        x_block=lambda M: M.submatrix(range(1, m + 1), [0]),
        z_matrix=z_matrix,
        x_matrix=x_matrix,
        g0_blocks=lambda M: (M.submatrix([0], [0]), M.submatrix(range(1, m + 1), range(1, m + 1))),
        bracket=bracket,
        formula="[Z,X] = (ZX, -XZ + I(XZ)^t I)",
    )
    name = f"o({p + 1},{q + 1})"
    return Family.CONFORMAL, name, {"p": p, "q": q}, Ring.RAT, gm1, g0, g1, e, maps, J


def _build_split(n: int, fld: str, symmetric: bool) -> tuple:
    """sp(2n, K) (symmetric off-diagonal blocks) or o(n, n) (skew blocks)."""
    ring = Ring.from_field(fld)
    units = _units(ring)
    N = 2 * n

    def sym_unit(i, j, u):
        m = Mat.unit(n, n, i, j, u, ring)
        if i == j:
            return m
        t = Mat.unit(n, n, j, i, u, ring)
        return m + t if symmetric else m - t

    pairs = [(i, j) for i in range(n) for j in range(i, n) if symmetric or i < j]
    zero = Mat.zeros(n, n, ring)

    def z_matrix(b):
        return Mat.block([[zero, b.lift(ring)], [zero, zero]])

    def x_matrix(c):
        return Mat.block([[zero, zero], [c.lift(ring), zero]])

    gm1 = [x_matrix(sym_unit(i, j, u)) for (i, j) in pairs for u in units]
    g0 = []
    for i in range(n):
        for j in range(n):
            for u in units:
                a = Mat.unit(n, n, i, j, u, ring)
                g0.append(Mat.block([[a, zero], [zero, -a.T]]))
    g1 = [z_matrix(sym_unit(i, j, u)) for (i, j) in pairs for u in units]
    e = Mat.diag([Fraction(1, 2)] * n + [Fraction(-1, 2)] * n, ring)
    if symmetric:
        form = Mat.block([[Mat.zeros(n, n), Mat.identity(n)], [-Mat.identity(n), Mat.zeros(n, n)]])
    else:
        form = Mat.block([[Mat.zeros(n, n), Mat.identity(n)], [Mat.identity(n), Mat.zeros(n, n)]])
    maps = BlockMaps(
        z_block=lambda M: M.submatrix(range(n), range(n, N)),
        x_block=lambda M: M.submatrix(range(n, N), range(n)),
        z_matrix=z_matrix,
        x_matrix=x_matrix,
        g0_blocks=lambda M: (-M.submatrix(range(n), range(n)),),
        bracket=lambda z, x: (-(z @ x),),
        formula="[Z,X] = -ZX",
    )
    if symmetric:
        return Family.LAGRANGEAN, f"sp({N},{fld})", {"n": n}, ring, gm1, g0, g1, e, maps, form
    return Family.SPINORIAL, f"o({n},{n})/spin", {"n": n}, ring, gm1, g0, g1, e, maps, form


def _validate(family: Family, fld: str, params: dict) -> dict:
    if fld not in ("R", "C", "H"):
        raise ModelError(f"unknown field {fld!r}; expected R, C or H")
    if family in (Family.PROJ_LIKE, Family.GRASSMANN):
        if family is Family.PROJ_LIKE and "p" not in params:
            params = {"n": params.get("n"), "p": 1}
        if "n" not in params and "q" in params:
            params = {"n": params["p"] + params["q"] - 1, "p": params["p"]}
        n, p = params.get("n"), params.get("p")
        if n is None or p is None:
            raise ModelError("sl family needs parameters n and p")
        q = n + 1 - p
        if n < 2:
            raise ModelError(f"n >= 2 required for sl(n+1), got n={n}")
        if not 1 <= p <= q:
            raise ModelError(f"1 <= p <= q required, got p={p}, q={q}")
        if family is Family.PROJ_LIKE and p != 1:
            raise ModelError(f"PROJ_LIKE requires p = 1, got p={p}")
        return {"n": n, "p": p}
    if family is Family.CONFORMAL:
        if fld != "R":
            raise ModelError("conformal models are real")
        p, q = params.get("p"), params.get("q")
        if p is None or q is None or p < 0 or q < 0:
            raise ModelError("conformal family needs p, q >= 0")
        if p + q < 3:
            raise ModelError(f"p + q >= 3 required, got p + q = {p + q}")
        return {"p": p, "q": q}
    n = params.get("n")
    if n is None:
        raise ModelError("parameter n required")
    if family is Family.LAGRANGEAN:
        if fld not in ("R", "C"):
            raise ModelError("Lagrangean models are over R or C")
        if n < 2:
            raise ModelError(f"n >= 2 required for sp(2n), got n={n}")
        return {"n": n}
    if fld != "R":
        raise ModelError("spinorial models are real")
    if n < 5:
        raise ModelError(f"n >= 5 required for o(n,n), got n={n}")
    return {"n": n}


def build_model(family, field: str = "R", **params) -> GradedModel:
    """Build and fully verify a graded model; results are cached."""
    family = Family(family)
    if family is Family.GRASSMANN and params.get("p") == 1:
        family = Family.PROJ_LIKE
    norm = _validate(family, field, dict(params))
    return _build_cached(family, field, tuple(sorted(norm.items())))


@lru_cache(maxsize=None)
def _build_cached(family: Family, fld: str, items: tuple) -> GradedModel:
    params = dict(items)
    if family in (Family.PROJ_LIKE, Family.GRASSMANN):
        built = _build_sl(params["n"], params["p"], fld)
    elif family is Family.CONFORMAL:
        built = _build_conformal(params["p"], params["q"])
    elif family is Family.LAGRANGEAN:
        built = _build_split(params["n"], fld, symmetric=True)
    else:
        built = _build_split(params["n"], fld, symmetric=False)
    fam, name, full_params, ring, gm1, g0, g1, e, maps, form = built
    basis = gm1 + g0 + g1
    algebra = LieAlgebra.from_basis(basis, name=name, check_jacobi=False)
    d1, d0 = len(gm1), len(g0)
    model = GradedModel(
        family=fam,
        field=fld,
        params=full_params,
        name=name,
        algebra=algebra,
        E=algebra.coords(e),
        gm1=list(range(d1)),
        g0=list(range(d1, d1 + d0)),
        g1=list(range(d1 + d0, d1 + d0 + len(g1))),
        blocks=maps,
        form=form,
    )
    mismatch = grading_mismatch(model)
    if mismatch:
        raise ModelError(f"grading eigenspaces disagree with block construction: {mismatch}")
    if form is not None:
        for b in algebra.basis:
            if b.T @ form + form @ b != Mat.zeros(b.rows, b.cols, b.ring):
                raise ModelError("basis element does not preserve the bilinear form")
    model.killing()  # raises on degeneracy
    return model


# ---------------------------------------------------------------------------
# grading checks

def grading_decomposition(model: GradedModel) -> dict[int, list[Vec]]:
    """Eigenspaces of ad(E) for -1, 0, 1 computed from scratch by kernels."""
    ad_e = model.algebra.ad(model.E)
    n = model.dim
    ident = Mat.identity(n)
    out = {}
    for lam in (-1, 0, 1):
        out[lam] = [tuple(v.column(0)) for v in la.kernel_basis(ad_e - ident.scale(lam))]
    return out


def grading_mismatch(model: GradedModel) -> str:
    decomp = grading_decomposition(model)
    total = sum(len(v) for v in decomp.values())
    if total != model.dim:
        return f"ad(E) eigenspaces for -1,0,1 have total dimension {total} != {model.dim}"
    for lam, name in ((-1, "gm1"), (0, "g0"), (1, "g1")):
        if not lie.same_span(decomp[lam], model.component_basis(name)):
            return f"eigenspace {lam} differs from block component {name}"
    return ""


def duality_pairing(model: GradedModel, z: Vec, x: Vec) -> Fraction:
    """Killing form value ``B(Z, X)``."""
    return model.algebra.killing_value(z, x)


def pairing_matrix(model: GradedModel) -> Mat:
    """Matrix ``B(Z_i, X_j)`` over the g_1 and g_-1 bases."""
    km = model.killing()
    return Mat([[km[i, j] for j in model.gm1] for i in model.g1])


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details, "failures": self.failures[:5]}


def verify_block_brackets(model: GradedModel) -> CheckReport:
    """Compare matrix brackets of basis pairs with the block bracket formula."""
    maps = model.blocks
    failures = []
    count = 0
    for i in model.g1:
        zb = maps.z_block(model.algebra.basis[i])
        for j in model.gm1:
            xb = maps.x_block(model.algebra.basis[j])
            br = model.bracket(model.algebra.unit(i), model.algebra.unit(j))
            got = maps.g0_blocks(model.matrix(br))
            want = maps.bracket(zb, xb)
            count += 1
            if len(got) != len(want) or any(a != b for a, b in zip(got, want)):
                failures.append({"z": i, "x": j})
    return CheckReport("block_brackets", not failures, {"pairs": count, "formula": maps.formula}, failures)


def _closure(model: GradedModel, start: Vec) -> int:
    """Dimension of the ideal generated by ``start``."""
    alg = model.algebra
    ech = la.SparseEchelon(track=False)
    ech.add(la.dense_to_sparse(start))
    frontier = [la.dense_to_sparse(start)]
    basis = [{i: Fraction(1)} for i in range(alg.dim)]
    while frontier and ech.rank < alg.dim:
        new = []
        for v in frontier:
            for b in basis:
                w = alg.bracket_sparse(b, v)
                if w and ech.add(w) is None:
                    new.append(w)
        frontier = new
    return ech.rank


def grading_checks(model: GradedModel) -> list[CheckReport]:
    """All structural invariants of a graded model, each as a report."""
    alg = model.algebra
    out = []
    d = model.dims
    out.append(CheckReport("direct_sum", sum(d) == alg.dim and d[0] == d[2] and lie.span_rank(
        model.component_basis("gm1") + model.component_basis("g0") + model.component_basis("g1")) == alg.dim,
        {"dims": list(d)}))
    out.append(CheckReport("antisymmetry", alg.is_antisymmetric()))
    bad = alg.jacobi_violation()
    out.append(CheckReport("jacobi", bad is None, failures=[list(bad)] if bad else []))
    fails = []
    grades = model._grades
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            target = grades[i] + grades[j]
            for k in alg.bracket_basis(i, j):
                if grades[k] != target:
                    fails.append([i, j, k])
    out.append(CheckReport("bracket_grading", not fails, failures=fails))
    ad_e = alg.ad(model.E)
    spec_ok = all(ad_e[k, i] == (grades[i] if k == i else 0) for i in range(alg.dim) for k in range(alg.dim))
    out.append(CheckReport("grading_element", spec_ok, {"spectrum": [-1, 0, 1]}))
    mism = grading_mismatch(model)
    out.append(CheckReport("grading_eigenspaces", not mism, failures=[mism] if mism else []))
    km = alg.killing()
    out.append(CheckReport("killing_nondegenerate", la.rank(km) == alg.dim, {"rank": alg.dim}))
    pm = pairing_matrix(model)
    orth = all(km[i, j] == 0 for i in model.g1 for j in model.g0 + model.g1) and all(
        km[i, j] == 0 for i in model.gm1 for j in model.g0 + model.gm1)
    out.append(CheckReport("killing_duality", la.rank(pm) == d[0] and orth, {"pairing_rank": la.rank(pm)}))
    abelian = all(not alg.bracket_basis(i, j) for comp in (model.gm1, model.g1) for i in comp for j in comp)
    out.append(CheckReport("abelian_g_pm1", abelian))
    gens = {name: model.component(name)[0] for name in ("gm1", "g0", "g1")}
    sizes = {name: _closure(model, alg.unit(i)) for name, i in gens.items()}
    out.append(CheckReport("simplicity_proxy", all(s == alg.dim for s in sizes.values()), {"ideal_dims": sizes}))
    out.append(verify_block_brackets(model))
    return out


# ---------------------------------------------------------------------------
# zoo

@dataclass(frozen=True)
class ZooEntry:
    id: str
    family: Family
    field: str
    params: tuple

    def build(self) -> GradedModel:
        return build_model(self.family, self.field, **dict(self.params))


def zoo_path() -> str:
    env = os.environ.get("PARABOLICA_ZOO")
    if env:
        return env
    return str(resources.files("parabolica") / "data" / "zoo.json")


def load_zoo_config(path: str | None = None) -> dict:
    with open(path or zoo_path(), encoding="utf-8") as fh:
        cfg = json.load(fh)
    recipes = cfg.get("partners", {})
    for fam in Family:
        if recipes.get(fam.value) not in PARTNER_RECIPES:
            raise ModelError(f"zoo config lacks a valid partner recipe for {fam.value}")
    return cfg


def load_zoo(path: str | None = None) -> list[ZooEntry]:
    cfg = load_zoo_config(path)
    out = []
    for item in cfg["models"]:
        out.append(ZooEntry(item["id"], Family(item["family"]), item["field"], tuple(sorted(item["params"].items()))))
    return out


def partner_recipe(family: Family, path: str | None = None) -> str:
    return _recipes(path or zoo_path())[Family(family).value]


@lru_cache(maxsize=None)
def _recipes(path: str) -> dict:
    return dict(load_zoo_config(path)["partners"])
