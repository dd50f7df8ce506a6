"""The curvature module W = Λ²g_-1* ⊗ g, its boundary maps and harmonic part.

Chains are ``C_k = Λ^k p_+ ⊗ g`` and cochains ``C^k = Λ^k g_-1* ⊗ g``; both
use the index set (sorted k-subset I of the g_-1 basis, basis index e of g),
identified through the Killing-dual basis ``Z_a*`` of g_1 with
``B(Z_a*, X_c) = δ_ac``.  Vectors are sparse dictionaries keyed by the flat
index ``position(I) * dim g + e``.

Both the homology boundary and the cochain differential commute with the
adjoint action of g_0, so every rank computation is split into weight blocks
of a rational torus of g_0 that acts diagonally on the chosen basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg as la
from . import lie
from .lie import Vec
from .linalg import Mat, SparseEchelon, sparse_add
from .models import GradedModel
from .sl2 import PropositionReport, Sl2Triple, eig_adA


class CurvatureError(ArithmeticError):
    pass


def _sign_sort(seq):
    """Sign of the permutation sorting ``seq`` and the sorted tuple (0 if repeated)."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0, None
    sign = 1
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign, tuple(s)


class CurvatureModule:
    """Chains and cochains ``Λ^k g_-1* ⊗ g`` of all degrees over a graded model."""

    def __init__(self, model: GradedModel):
        self.model = model
        alg = model.algebra
        self.d = len(model.gm1)
        self.G = alg.dim
        self.subsets = {k: list(combinations(range(self.d), k)) for k in range(max(self.d, 3) + 1)}
        self.position = {k: {s: i for i, s in enumerate(v)} for k, v in self.subsets.items()}
        self.dim = len(self.subsets[2]) * self.G
        # Killing-dual basis Z_a* of g_1
        pm = Mat([[alg.killing()[i, j] for j in model.gm1] for i in model.g1])
        inv = pm.inverse()  # rows: coefficients of Z_a* on the g_1 basis
        self.zdual = []
        for a in range(self.d):
            self.zdual.append({model.g1[i]: inv[a, i] for i in range(self.d) if inv[a, i]})
        for a in range(self.d):
            for c in range(self.d):
                val = sum((v * alg.killing()[i, model.gm1[c]] for i, v in self.zdual[a].items()), Fraction(0))
                if val != (1 if a == c else 0):
                    raise CurvatureError("Killing dual basis construction failed")
        self._ad_z = [[alg.bracket_sparse(self.zdual[a], {e: Fraction(1)}) for e in range(self.G)]
                      for a in range(self.d)]
        self._ad_x = [[alg.bracket_sparse({model.gm1[c]: Fraction(1)}, {e: Fraction(1)}) for e in range(self.G)]
                      for c in range(self.d)]
        self.homogeneity = [model.grade_of(e) + 2 for e in range(self.G)]  # W_i index of e
        self._torus = self._find_torus()
        self._weights = [tuple(w[e] for w in self._torus) for e in range(self.G)]
        self._gm1_weights = [self._weights[model.gm1[a]] for a in range(self.d)]
        self._cache: dict = {}

    # indexing ---------------------------------------------------------------
    def index(self, subset: tuple, e: int, k: int = 2) -> int:
        return self.position[k][subset] * self.G + e

    def unpack(self, idx: int, k: int = 2) -> tuple[tuple, int]:
        return self.subsets[k][idx // self.G], idx % self.G

    def size(self, k: int) -> int:
        return len(self.subsets[k]) * self.G

    def component_dims(self) -> dict:
        pairs = len(self.subsets[2])
        counts = {1: 0, 2: 0, 3: 0}
        for h in self.homogeneity:
            counts[h] += pairs
        return counts

    def homogeneity_of(self, idx: int) -> int:
        return self.homogeneity[idx % self.G]

    # torus weights ------------------------------------------------------------
    def _find_torus(self) -> list[list[Fraction]]:
        alg = self.model.algebra
        torus = []
        candidates = [self.model.E] + [alg.unit(i) for i in self.model.g0]
        for t in candidates:
            xs = {i: a for i, a in enumerate(t) if a}
            weights = []
            for j in range(self.G):
                img = alg.bracket_sparse(xs, {j: Fraction(1)})
                if not img:
                    weights.append(Fraction(0))
                elif list(img) == [j]:
                    weights.append(img[j])
                else:
                    break
            else:
                torus.append(weights)
        return torus

    def weight(self, idx: int, k: int) -> tuple:
        subset, e = self.unpack(idx, k)
        w = list(self._weights[e])
        for a in subset:
            for t, x in enumerate(self._gm1_weights[a]):
                w[t] -= x
        return tuple(w)

    def weight_blocks(self, k: int) -> dict:
        key = ("blocks", k)
        if key not in self._cache:
            blocks: dict = {}
            for idx in range(self.size(k)):
                blocks.setdefault(self.weight(idx, k), []).append(idx)
            self._cache[key] = blocks
        return self._cache[key]

    # maps on basis vectors ---------------------------------------------------
    def boundary_basis(self, idx: int, k: int) -> dict:
        """``∂*`` of a chain basis vector of degree k (1 <= k <= dim g_-1)."""
        subset, e = self.unpack(idx, k)
        out: dict = {}
        if k == 1:
            for f, v in self._ad_z[subset[0]][e].items():
                out[f] = -v
            return out
        for j, a in enumerate(subset):
            sign = 1 if j % 2 == 0 else -1
            rest = subset[:j] + subset[j + 1:]
            base = self.position[k - 1][rest] * self.G
            for f, v in self._ad_z[a][e].items():
                nv = out.get(base + f, 0) + sign * v
                if nv:
                    out[base + f] = nv
                else:
                    out.pop(base + f, None)
        return out

    def differential_basis(self, idx: int, k: int) -> dict:
        """``∂`` of the cochain basis vector ``X_I* ⊗ e`` of degree k (0 <= k < dim g_-1)."""
        subset, e = self.unpack(idx, k)
        out: dict = {}
        for c in range(self.d):
            if c in subset:
                continue
            target = tuple(sorted(subset + (c,)))
            sign = 1 if target.index(c) % 2 == 0 else -1
            base = self.position[k + 1][target] * self.G
            for f, v in self._ad_x[c][e].items():
                nv = out.get(base + f, 0) + sign * v
                if nv:
                    out[base + f] = nv
                else:
                    out.pop(base + f, None)
        return out

    def apply(self, fn, vec: dict, k: int) -> dict:
        out: dict = {}
        for idx, c in vec.items():
            sparse_add(out, fn(idx, k), c)
        return out

    def boundary(self, k: int = 2) -> Mat:
        """Dense matrix of ``∂*: C_k -> C_{k-1}`` (columns are images of basis vectors)."""
        rows, cols = self.size(k - 1), self.size(k)
        m = [[Fraction(0)] * cols for _ in range(rows)]
        for j in range(cols):
            for i, v in self.boundary_basis(j, k).items():
                m[i][j] = v
        return Mat(m)

    def cochain_differential(self, k: int = 1) -> Mat:
        """Dense matrix of ``∂: C^k -> C^{k+1}``."""
        rows, cols = self.size(k + 1), self.size(k)
        m = [[Fraction(0)] * cols for _ in range(rows)]
        for j in range(cols):
            for i, v in self.differential_basis(j, k).items():
                m[i][j] = v
        return Mat(m)

    def boundary_rank(self, k: int) -> int:
        key = ("rank_bd", k)
        if key not in self._cache:
            total = 0
            for block in self.weight_blocks(k).values():
                total += la.sparse_rank(self.boundary_basis(j, k) for j in block)
            self._cache[key] = total
        return self._cache[key]

    def differential_rank(self, k: int) -> int:
        key = ("rank_d", k)
        if key not in self._cache:
            total = 0
            for block in self.weight_blocks(k).values():
                total += la.sparse_rank(self.differential_basis(j, k) for j in block)
            self._cache[key] = total
        return self._cache[key]

    # actions of g_0 on W ----------------------------------------------------------
    def g0_action(self, u: Vec, vec: dict) -> dict:
        """``(u·α)(Y,V) = [u, α(Y,V)] - α([u,Y],V) - α(Y,[u,V])`` for u in g_0."""
        model = self.model
        alg = model.algebra
        us = {i: a for i, a in enumerate(u) if a}
        # u acting on g_-1 coordinates: [u, X_c] = sum_a m[a][c] X_a
        pos = {g: a for a, g in enumerate(model.gm1)}
        m_gm1 = []
        for c in range(self.d):
            img = alg.bracket_sparse(us, {model.gm1[c]: Fraction(1)})
            m_gm1.append({pos[g]: v for g, v in img.items()})
        out: dict = {}
        for idx, coeff in vec.items():
            (a, b), e = self.unpack(idx, 2)
            for f, v in alg.bracket_sparse(us, {e: Fraction(1)}).items():
                sparse_add(out, {self.index((a, b), f): v}, coeff)
            # dual action u·X_a* = -sum_c m[a][c] X_c*
            for slot, (x, y) in enumerate(((a, b), (b, a))):
                for c in range(self.d):
                    v = m_gm1[c].get(x)
                    if not v:
                        continue
                    sign, srt = _sign_sort((c, y))
                    if sign == 0:
                        continue
                    factor = -v * (sign if slot == 0 else -sign)
                    sparse_add(out, {self.index(srt, e): factor}, coeff)
        return out

    def z_action(self, z: Vec, vec: dict) -> dict:
        """Action of Z in g_1: post-composition with ad Z (Z acts trivially on g/p)."""
        alg = self.model.algebra
        zs = {i: a for i, a in enumerate(z) if a}
        out: dict = {}
        for idx, coeff in vec.items():
            pair, e = self.unpack(idx, 2)
            for f, v in alg.bracket_sparse(zs, {e: Fraction(1)}).items():
                sparse_add(out, {self.index(pair, f): v}, coeff)
        return out

    def group_action(self, ad_g: Mat, vec: dict) -> dict:
        """Action of a group element of G_0 given by its adjoint matrix on g."""
        model = self.model
        gm1 = model.gm1
        sub = ad_g.submatrix(gm1, gm1)
        inv = sub.inverse()
        # g·X_c* = X_c* ∘ Ad(g^-1) = sum_a inv[c][a] X_a*
        out: dict = {}
        for idx, coeff in vec.items():
            (c1, c2), e = self.unpack(idx, 2)
            img_e = {f: ad_g[f, e] for f in range(self.G) if ad_g[f, e]}
            for a1 in range(self.d):
                x1 = inv[c1, a1]
                if not x1:
                    continue
                for a2 in range(self.d):
                    x2 = inv[c2, a2]
                    if not x2 or a1 == a2:
                        continue
                    sign, srt = _sign_sort((a1, a2))
                    base = self.position[2][srt] * self.G
                    f12 = coeff * x1 * x2 * sign
                    for f, v in img_e.items():
                        key = base + f
                        nv = out.get(key, 0) + f12 * v
                        if nv:
                            out[key] = nv
                        else:
                            out.pop(key, None)
        return out


def build_W(model: GradedModel) -> CurvatureModule:
    cache = model._cache
    if "W" not in cache:
        cache["W"] = CurvatureModule(model)
    return cache["W"]


# ---------------------------------------------------------------------------
# insertion

def insertion(module: CurvatureModule, alpha: dict, y: Vec) -> dict:
    """``α⌟Y`` in ``g_-1* ⊗ g``, keyed by ``c * dim g + e``: ``(α⌟Y)(V) = α(Y, V)``."""
    ys = [y[g] for g in module.model.gm1]
    out: dict = {}
    G = module.G
    for idx, coeff in alpha.items():
        (a, b), e = module.unpack(idx, 2)
        # (X_a*∧X_b*)(Y, V) = Y_a V_b - Y_b V_a
        if ys[a]:
            sparse_add(out, {b * G + e: ys[a]}, coeff)
        if ys[b]:
            sparse_add(out, {a * G + e: -ys[b]}, coeff)
    return out


def evaluate(module: CurvatureModule, alpha: dict, y: Vec, v: Vec) -> dict:
    """``α(Y, V)`` as a sparse vector in g."""
    ins = insertion(module, alpha, y)
    vs = [v[g] for g in module.model.gm1]
    out: dict = {}
    for key, coeff in ins.items():
        c, e = divmod(key, module.G)
        if vs[c]:
            sparse_add(out, {e: vs[c]}, coeff)
    return out


def elementary(module: CurvatureModule, a: int, b: int, e: int) -> dict:
    """``X_a* ∧ X_b* ⊗ e`` as a sparse W vector."""
    sign, srt = _sign_sort((a, b))
    if sign == 0:
        return {}
    return {module.index(srt, e): Fraction(sign)}


# ---------------------------------------------------------------------------
# A-eigenstructure on W

@dataclass
class WEigen:
    """Product eigenbasis of W: entries (pair of dual indices, g eigenvector index)."""

    dual: list            # dual eigenvectors xi_a as dicts over g_-1 positions
    dual_values: list     # eigenvalue of xi_a (negative of the g_-1 eigenvalue)
    g_vectors: list       # eigenvectors of ad A on g (homogeneous)
    g_values: list
    g_grades: list
    entries: list         # (a, b, k, eigenvalue, homogeneity)

    def dims(self) -> dict:
        out: dict = {}
        for (_, _, _, lam, h) in self.entries:
            out.setdefault(h, {}).setdefault(lam, 0)
            out[h][lam] += 1
        return {h: dict(sorted(v.items())) for h, v in sorted(out.items())}


def a_eigen_on_W(module: CurvatureModule, triple: Sl2Triple, verify: bool = True) -> WEigen:
    key = ("weigen", triple.A)
    cache = module._cache
    if key in cache:
        return cache[key]
    model = module.model
    dm1 = eig_adA(model, triple, "gm1")
    ys, mus = [], []
    for lam in sorted(dm1.spaces):
        for v in dm1.spaces[lam]:
            ys.append([v[g] for g in model.gm1])
            mus.append(lam)
    ymat = Mat([[ys[a][c] for a in range(module.d)] for c in range(module.d)])  # columns y_a
    yinv = ymat.inverse()  # rows give xi_a in the X_c* basis
    dual = [{c: yinv[a, c] for c in range(module.d) if yinv[a, c]} for a in range(module.d)]
    dual_values = [-m for m in mus]
    g_vectors, g_values, g_grades = [], [], []
    for comp, grade in (("gm1", -1), ("g0", 0), ("g1", 1)):
        dec = eig_adA(model, triple, comp)
        for lam in sorted(dec.spaces):
            for v in dec.spaces[lam]:
                g_vectors.append({i: x for i, x in enumerate(v) if x})
                g_values.append(lam)
                g_grades.append(grade)
    entries = []
    for a, b in combinations(range(module.d), 2):
        for k in range(len(g_vectors)):
            lam = dual_values[a] + dual_values[b] + g_values[k]
            entries.append((a, b, k, lam, g_grades[k] + 2))
    we = WEigen(dual, dual_values, g_vectors, g_values, g_grades, entries)
    if verify:
        for (a, b, k, lam, _) in entries:
            vec = product_vector(module, we, a, b, k)
            img = module.g0_action(triple.A, vec)
            if img != {i: lam * c for i, c in vec.items() if lam}:
                raise CurvatureError(f"claimed W eigenvector ({a},{b},{k}) fails A-action check")
    cache[key] = we
    return we


def product_vector(module: CurvatureModule, we: WEigen, a: int, b: int, k: int) -> dict:
    """``xi_a ∧ xi_b ⊗ v_k`` expanded in the coordinate basis."""
    out: dict = {}
    v = we.g_vectors[k]
    for c1, x1 in we.dual[a].items():
        for c2, x2 in we.dual[b].items():
            sign, srt = _sign_sort((c1, c2))
            if not sign:
                continue
            base = module.position[2][srt] * module.G
            f = x1 * x2 * sign
            for e, y in v.items():
                key = base + e
                nv = out.get(key, 0) + f * y
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
    return out


def eigen_window_report(module: CurvatureModule, triple: Sl2Triple) -> PropositionReport:
    """Minimum eigenvalues: W_1 >= -2, W_2 >= -1, W_3 >= 0."""
    we = a_eigen_on_W(module, triple)
    dims = we.dims()
    bounds = {1: -2, 2: -1, 3: 0}
    mins = {h: min(v) for h, v in dims.items() if v}
    ok = all(mins[h] >= bounds[h] for h in mins)
    neg = {h: sorted(l for l in v if l < 0) for h, v in dims.items()}
    ok = ok and set(neg.get(1, [])) <= {-2, -1} and set(neg.get(2, [])) <= {-1} and not neg.get(3)
    return PropositionReport("W_eigenvalue_windows", ok, {"min": mins, "negative": neg})


# ---------------------------------------------------------------------------
# complex checks and the harmonic module

@dataclass
class KostantReport:
    dim_W: int
    dims_Wi: dict
    rank_boundary: dict      # k -> rank of ∂*: C_k -> C_{k-1}
    rank_differential: dict  # k -> rank of ∂: C^k -> C^{k+1}
    dim_ker_boundary2: int
    dim_harmonic: int
    harmonic_meets_image: int
    boundary_squares_zero: bool
    differential_squares_zero: bool
    split_ok: bool
    torus_rank: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (self.boundary_squares_zero and self.differential_squares_zero and self.split_ok
                and self.harmonic_meets_image == 0)

    def to_json(self) -> dict:
        return {
            "dim_W": self.dim_W,
            "dims_Wi": {str(k): v for k, v in self.dims_Wi.items()},
            "rank_boundary": {str(k): v for k, v in self.rank_boundary.items()},
            "rank_differential": {str(k): v for k, v in self.rank_differential.items()},
            "dim_ker_boundary2": self.dim_ker_boundary2,
            "dim_harmonic": self.dim_harmonic,
            "harmonic_meets_image": self.harmonic_meets_image,
            "boundary_squares_zero": self.boundary_squares_zero,
            "differential_squares_zero": self.differential_squares_zero,
            "split_ok": self.split_ok,
            "passed": self.passed,
            **self.details,
        }


def boundary_squares_zero(module: CurvatureModule) -> bool:
    for k in (2, 3):
        for j in range(module.size(k)):
            if module.apply(module.boundary_basis, module.boundary_basis(j, k), k - 1):
                return False
    return True


def differential_squares_zero(module: CurvatureModule) -> bool:
    for k in (0, 1):
        for j in range(module.size(k)):
            if module.apply(module.differential_basis, module.differential_basis(j, k), k + 1):
                return False
    return True


def harmonic_module(module: CurvatureModule) -> list[dict]:
    """Basis of ``Ŵ = ker(∂*: C_2 -> C_1) ∩ ker(∂: C^2 -> C^3)`` as sparse W vectors."""
    key = "harmonic"
    if key in module._cache:
        return module._cache[key]
    offset = module.size(1)
    basis = []
    for wt, block in sorted(module.weight_blocks(2).items()):
        cols = []
        for j in block:
            col = dict(module.boundary_basis(j, 2))
            for i, v in module.differential_basis(j, 2).items():
                col[offset + i] = v
            cols.append(col)
        for dep in la.sparse_kernel(cols):
            basis.append({block[j]: c for j, c in dep.items()})
    module._cache[key] = basis
    return basis


def kostant_report(module: CurvatureModule) -> KostantReport:
    harmonic = harmonic_module(module)
    rank_b = {k: module.boundary_rank(k) for k in (1, 2, 3)}
    rank_d = {k: module.differential_rank(k) for k in (0, 1, 2)}
    ker_b2 = module.size(2) - rank_b[2]
    # Ŵ ∩ im ∂*_3, blockwise
    meets = 0
    by_block: dict = {}
    for h in harmonic:
        by_block.setdefault(module.weight(next(iter(h)), 2), []).append(h)
    for wt, block in module.weight_blocks(3).items():
        images = [module.boundary_basis(j, 3) for j in block]
        hs = by_block.get(wt, [])
        r_img = la.sparse_rank(images)
        r_all = la.sparse_rank(images + hs)
        meets += r_img + len(hs) - r_all
    split = ker_b2 == len(harmonic) + rank_b[3]
    return KostantReport(
        dim_W=module.dim,
        dims_Wi=module.component_dims(),
        rank_boundary=rank_b,
        rank_differential=rank_d,
        dim_ker_boundary2=ker_b2,
        dim_harmonic=len(harmonic),
        harmonic_meets_image=meets,
        boundary_squares_zero=boundary_squares_zero(module),
        differential_squares_zero=differential_squares_zero(module),
        split_ok=split,
        torus_rank=len(module._torus),
        details={"weight_blocks": len(module.weight_blocks(2))},
    )


def _echelon(vectors) -> SparseEchelon:
    ech = SparseEchelon(track=False)
    for v in vectors:
        ech.add(v)
    return ech


def harmonic_invariance(module: CurvatureModule, elements) -> bool:
    """Ŵ is stable under the g_0 action of each given element."""
    harmonic = harmonic_module(module)
    ech = _echelon(harmonic)
    for u in elements:
        for h in harmonic:
            if not ech.contains(module.g0_action(u, h)):
                return False
    return True


def harmonic_eigen_dims(module: CurvatureModule, triple: Sl2Triple) -> dict:
    """Eigenvalue multiplicities of A on Ŵ via the matrix of A restricted to Ŵ."""
    harmonic = harmonic_module(module)
    if not harmonic:
        return {}
    ech = SparseEchelon(track=True)
    for i, h in enumerate(harmonic):
        ech.add(h, tag=i)
    n = len(harmonic)
    cols = []
    for h in harmonic:
        img = module.g0_action(triple.A, h)
        resid, prov = ech.reduce(img)
        if resid:
            raise CurvatureError("harmonic module is not A-invariant")
        cols.append({i: -c for i, c in prov.items()})
    m = Mat([[cols[j].get(i, Fraction(0)) for j in range(n)] for i in range(n)])
    ident = Mat.identity(n)
    out = {}
    total = 0
    for lam in range(-2, 7):
        dim = n - la.rank(m - ident.scale(lam))
        if dim:
            out[lam] = dim
            total += dim
    if total != n:
        raise CurvatureError("A is not diagonalizable on the harmonic module with integer eigenvalues")
    return out


def harmonic_dim(module: CurvatureModule, k: int) -> int:
    """``dim(ker ∂* ∩ ker ∂)`` in degree k, blockwise by torus weight."""
    key = ("harmonic_dim", k)
    if key not in module._cache:
        offset = module.size(k - 1) if k >= 1 else 0
        total = 0
        for block in module.weight_blocks(k).values():
            cols = []
            for j in block:
                col = dict(module.boundary_basis(j, k)) if k >= 1 else {}
                if k < module.d:
                    for i, v in module.differential_basis(j, k).items():
                        col[offset + i] = v
                cols.append(col)
            total += len(block) - la.sparse_rank(cols)
        module._cache[key] = total
    return module._cache[key]


def euler_check(module: CurvatureModule) -> dict:
    """Harmonic chains against homology in every degree and their Euler characteristics.

    Homology dims come from ranks of ∂*; harmonic dims from the joint kernel
    of ∂* and ∂.  Both must agree degree by degree and the alternating sum
    must equal that of the chain groups.
    """
    d = module.d
    dims = {k: module.size(k) for k in range(d + 1)}
    ranks = {k: (module.boundary_rank(k) if 1 <= k <= d else 0) for k in range(d + 2)}
    homology = {k: dims[k] - ranks[k] - ranks[k + 1] for k in dims}
    harmonic = {k: harmonic_dim(module, k) for k in dims}
    chi_c = sum((-1) ** k * v for k, v in dims.items())
    chi_h = sum((-1) ** k * v for k, v in harmonic.items())
    return {"chains": dims, "homology": homology, "harmonic": harmonic, "chi_chains": chi_c,
            "chi_harmonic": chi_h, "passed": chi_c == chi_h and homology == harmonic}


# ---------------------------------------------------------------------------
# kernel inclusions and strongly stable triviality

def _kernel_of_insertion_contains(module, vec, y) -> bool:
    return not insertion(module, vec, y)


def check_kernel_inclusions(module: CurvatureModule, triple: Sl2Triple) -> PropositionReport:
    model = module.model
    we = a_eigen_on_W(module, triple)
    ys = eig_adA(model, triple, "gm1").space(-2)
    sets = {"a": [], "b": [], "c": []}
    for (a, b, k, lam, h) in we.entries:
        if lam <= 0 and we.g_values[k] >= -1:
            sets["a"].append((a, b, k))
        if lam < 0:
            sets["b"].append((a, b, k))
        if h == 3 and lam == 1:
            sets["c"].append((a, b, k))
    failures = []
    for name, members in sets.items():
        for (a, b, k) in members:
            vec = product_vector(module, we, a, b, k)
            for y in ys:
                if insertion(module, vec, y):
                    failures.append({"inclusion": name, "alpha": [a, b, k], "Y": [str(c) for c in y]})
    # Z preserves ker(⌟Y): test on elementary generators of the kernel
    z_fail = 0
    gens = 0
    for y in ys:
        for (a, b, k, lam, h) in we.entries:
            vec = product_vector(module, we, a, b, k)
            if insertion(module, vec, y):
                continue
            gens += 1
            if insertion(module, module.z_action(triple.Z, vec), y):
                z_fail += 1
    if z_fail:
        failures.append({"inclusion": "Z-invariance", "count": z_fail})
    details = {name: len(v) for name, v in sets.items()}
    details["Y_basis"] = len(ys)
    details["kernel_generators_checked"] = gens
    return PropositionReport("kernel_inclusions", not failures, details, failures)


@dataclass
class SSReport:
    dim_harmonic_ss: int
    dim_W_ss: int
    dim_C: int
    dim_gm1_m2: int
    consistent: bool
    harmonic_eigen: dict

    def to_json(self) -> dict:
        return {"dim_harmonic_ss": self.dim_harmonic_ss, "dim_W_ss": self.dim_W_ss, "dim_C": self.dim_C,
                "dim_gm1_m2": self.dim_gm1_m2, "consistent": self.consistent,
                "harmonic_eigen": {str(k): v for k, v in self.harmonic_eigen.items()}}


def ss_triviality_report(module: CurvatureModule, triple: Sl2Triple) -> SSReport:
    model = module.model
    we = a_eigen_on_W(module, triple)
    w_ss = sum(1 for e in we.entries if e[3] < 0)
    dm1 = eig_adA(model, triple, "gm1")
    dim_c = len(dm1.space(0))
    h_eigen = harmonic_eigen_dims(module, triple)
    h_ss = sum(v for lam, v in h_eigen.items() if lam < 0)
    consistent = h_ss <= w_ss and (dim_c != 0 or w_ss == 0) and (w_ss != 0 or h_ss == 0)
    if not consistent:
        raise CurvatureError(f"consistency violated: C={dim_c}, W^ss={w_ss}, Ŵ^ss={h_ss}")
    return SSReport(h_ss, w_ss, dim_c, len(dm1.space(-2)), consistent, h_eigen)
