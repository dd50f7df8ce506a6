"""Matrix Lie algebras with rational structure constants.

An algebra is given by a list of matrices over Q, Q(i) or H(Q) that is
linearly independent over Q and closed under the commutator.  Everything is
stored realified: coordinates are tuples of Fractions and the structure
constants are sparse rational dictionaries.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg as la
from .linalg import Mat

Vec = tuple  # coordinate vector of Fractions


class LieAlgebraError(ValueError):
    pass


# small helpers on coordinate tuples

def vzero(n: int) -> Vec:
    return (Fraction(0),) * n


def vunit(n: int, i: int) -> Vec:
    return tuple(Fraction(int(k == i)) for k in range(n))


def vadd(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in x)


def vcomb(terms, n: int) -> Vec:
    """Linear combination of ``(coeff, vec)`` pairs."""
    out = [Fraction(0)] * n
    for c, v in terms:
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero(x: Vec) -> bool:
    return not any(x)


def commutator(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


def exp_nilpotent(m: Mat) -> Mat:
    """Exact exponential of a nilpotent square matrix as a finite sum."""
    if not m.is_square():
        raise ValueError("exp_nilpotent needs a square matrix")
    n = m.rows
    total = Mat.identity(n, m.ring)
    term = Mat.identity(n, m.ring)
    for j in range(1, n + 1):
        term = (term @ m).scale(Fraction(1, j))
        if term.is_zero():
            return total
        total = total + term
    raise LieAlgebraError("not nilpotent")


class LieAlgebra:
    """A Lie algebra of matrices with a fixed basis."""

    def __init__(self, basis: Sequence[Mat], structure: list[list[dict]], pivot_rows, pivot_inverse, name: str = ""):
        self.basis = list(basis)
        self.dim = len(basis)
        self.ring = basis[0].ring if basis else None
        self.size = basis[0].rows if basis else 0
        self.name = name
        self._c = structure
        self._pivot_rows = pivot_rows
        self._pivot_inverse = pivot_inverse
        self._killing: Mat | None = None
        self._flat = [la.flatten(b) for b in self.basis]

    # construction -----------------------------------------------------------
    @classmethod
    def from_basis(cls, matrices: Sequence[Mat], name: str = "", check_jacobi: bool = True) -> "LieAlgebra":
        mats = list(matrices)
        if not mats:
            raise LieAlgebraError("dependent basis: empty basis")
        ring = la._widest(m.ring for m in mats)
        mats = [m.lift(ring) for m in mats]
        flat = [la.flatten(m) for m in mats]
        d = len(mats)
        # pick coordinate rows on which the basis is invertible
        col_mat = Mat([[flat[j][r] for j in range(d)] for r in range(len(flat[0]))])
        rows = la.column_space_basis(col_mat.T)
        if len(rows) < d:
            raise LieAlgebraError("dependent basis: rank %d < %d" % (len(rows), d))
        square = col_mat.submatrix(rows, range(d))
        inverse = square.inverse()
        alg = cls(mats, [], rows, inverse, name)
        structure = []
        for i in range(d):
            row = []
            for j in range(d):
                if j < i:
                    row.append({k: -v for k, v in structure[j][i].items()})
                    continue
                if j == i:
                    row.append({})
                    continue
                br = commutator(mats[i], mats[j])
                coords = alg.coords(br)  # raises if outside the span
                row.append({k: v for k, v in enumerate(coords) if v})
            structure.append(row)
        alg._c = structure
        if check_jacobi:
            bad = alg.jacobi_violation()
            if bad is not None:
                raise LieAlgebraError("Jacobi identity fails on basis triple %s" % (bad,))
        return alg

    # coordinates ------------------------------------------------------------
    def coords(self, m: Mat) -> Vec:
        """Coordinates of a matrix in the basis; raises if it is outside the span."""
        flat = la.flatten(m.lift(self.ring))
        rhs = [flat[r] for r in self._pivot_rows]
        inv = self._pivot_inverse
        x = tuple(sum((inv[i, k] * rhs[k] for k in range(self.dim) if rhs[k]), Fraction(0)) for i in range(self.dim))
        # confirm the candidate reproduces the whole matrix
        recon = [Fraction(0)] * len(flat)
        for c, f in zip(x, self._flat):
            if c:
                for r, a in enumerate(f):
                    if a:
                        recon[r] += c * a
        if recon != flat:
            raise LieAlgebraError("not closed under bracket: matrix outside the span of the basis")
        return x

    def to_matrix(self, x: Vec) -> Mat:
        out = Mat.zeros(self.size, self.size, self.ring)
        for c, b in zip(x, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def unit(self, i: int) -> Vec:
        return vunit(self.dim, i)

    def zero(self) -> Vec:
        return vzero(self.dim)

    # structure --------------------------------------------------------------
    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._c[i][j].get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> dict:
        """Sparse coordinates of ``[e_i, e_j]``."""
        return self._c[i][j]

    def bracket(self, x: Vec, y: Vec) -> Vec:
        out = [Fraction(0)] * self.dim
        nx = [(i, a) for i, a in enumerate(x) if a]
        ny = [(j, b) for j, b in enumerate(y) if b]
        for i, a in nx:
            ci = self._c[i]
            for j, b in ny:
                for k, v in ci[j].items():
                    out[k] += a * b * v
        return tuple(out)

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            ci = self._c[i]
            for j, b in y.items():
                ab = a * b
                for k, v in ci[j].items():
                    nv = out.get(k, 0) + ab * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def ad(self, x: Vec) -> Mat:
        """Matrix of ``y -> [x, y]`` (columns are images of basis vectors)."""
        cols = [self.bracket(x, self.unit(j)) for j in range(self.dim)]
        return Mat([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def ad_sparse(self, x: Vec) -> list[dict]:
        """Columns of ``ad x`` as sparse dictionaries."""
        xs = {i: a for i, a in enumerate(x) if a}
        return [self.bracket_sparse(xs, {j: Fraction(1)}) for j in range(self.dim)]

    def killing(self) -> Mat:
        """Killing form ``B(x, y) = tr(ad x ad y)`` on the basis; checks nondegeneracy."""
        if self._killing is None:
            d = self.dim
            # ad_i[l][k] = c[i][k][l]
            ads = []
            for i in range(d):
                entries = {}
                for k in range(d):
                    for l, v in self._c[i][k].items():
                        entries[(l, k)] = v
                ads.append(entries)
            rows_of = []
            for i in range(d):
                by_row: dict = {}
                for (l, k), v in ads[i].items():
                    by_row.setdefault(l, {})[k] = v
                rows_of.append(by_row)
            b = [[Fraction(0)] * d for _ in range(d)]
            for i in range(d):
                for j in range(i, d):
                    s = Fraction(0)
                    bj = rows_of[j]
                    for (k, l), v in ads[i].items():
                        w = bj.get(l, {}).get(k)
                        if w:
                            s += v * w
                    b[i][j] = b[j][i] = s
            km = Mat(b)
            if la.rank(km) != d:
                raise LieAlgebraError("degenerate Killing form")
            self._killing = km
        return self._killing

    def killing_value(self, x: Vec, y: Vec) -> Fraction:
        km = self.killing()
        s = Fraction(0)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        s += a * km[i, j] * b
        return s

    def centralizer(self, x: Vec) -> list[Vec]:
        """Basis of the kernel of ``ad x``."""
        return [tuple(v.column(0)) for v in la.kernel_basis(self.ad(x))]

    def centralizer_in(self, x: Vec, subspace: Sequence[Vec]) -> list[Vec]:
        """Basis of ``{y in span(subspace) : [x, y] = 0}``."""
        if not subspace:
            return []
        images = [self.bracket(x, v) for v in subspace]
        m = Mat([[images[j][i] for j in range(len(subspace))] for i in range(self.dim)])
        out = []
        for k in la.kernel_basis(m):
            out.append(vcomb(zip(k.column(0), subspace), self.dim))
        return out

    # checks -----------------------------------------------------------------
    def jacobi_violation(self):
        """First basis triple violating Jacobi, or ``None``."""
        for i, j, k in combinations(range(self.dim), 3):
            total: dict = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self._c[a][b]
                for m, v in inner.items():
                    la.sparse_add(total, self._c[m][c], v)
            if total:
                return (i, j, k)
        return None

    def is_antisymmetric(self) -> bool:
        for i in range(self.dim):
            for j in range(self.dim):
                a, b = self._c[i][j], self._c[j][i]
                if set(a) != set(b) or any(a[k] != -b[k] for k in a):
                    return False
        return True

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim}, ring={self.ring.value})"


# subspace helpers --------------------------------------------------------

def span_rank(vectors: Sequence[Vec]) -> int:
    return la.sparse_rank(la.dense_to_sparse(v) for v in vectors)


def in_span(vec: Vec, vectors: Sequence[Vec]) -> bool:
    ech = la.SparseEchelon(track=False)
    for v in vectors:
        ech.add(la.dense_to_sparse(v))
    return ech.contains(la.dense_to_sparse(vec))


def same_span(a: Sequence[Vec], b: Sequence[Vec]) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def intersect(a: Sequence[Vec], b: Sequence[Vec], n: int) -> list[Vec]:
    """Basis of ``span(a) ∩ span(b)``."""
    if not a or not b:
        return []
    cols = [la.dense_to_sparse(v) for v in a] + [la.dense_to_sparse(vscale(-1, v)) for v in b]
    out = []
    for dep in la.sparse_kernel(cols):
        terms = [(c, a[j]) for j, c in dep.items() if j < len(a)]
        v = vcomb(terms, n)
        if not is_zero(v):
            out.append(v)
    return independent(out)


def independent(vectors: Sequence[Vec]) -> list[Vec]:
    """A maximal independent subfamily, preserving order."""
    ech = la.SparseEchelon(track=False)
    out = []
    for v in vectors:
        if ech.add(la.dense_to_sparse(v)) is None:
            out.append(v)
    return out


def solve_in_span(target: Vec, vectors: Sequence[Vec]):
    """Coefficients ``c`` with ``sum c_j vectors[j] = target`` or ``None``."""
    if not vectors:
        return () if is_zero(target) else None
    n = len(target)
    m = Mat([[vectors[j][i] for j in range(len(vectors))] for i in range(n)])
    x = la.solve(m, Mat([[t] for t in target]))
    return None if x is None else tuple(x.column(0))
