"""Dense exact linear algebra over Q, Q(i) and H(Q), plus a sparse rational echelon.

Matrices act on column vectors.  Over the quaternions columns are right
modules: null spaces and column spans are right submodules and elimination
uses left row operations only, which preserve the right null space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import scalars as sc
from .scalars import Ring


class NotDiagonalizableError(ArithmeticError):
    pass


class Mat:
    """Immutable matrix with entries in one exact ring."""

    __slots__ = ("rows", "cols", "ring", "_e")

    def __init__(self, entries: Sequence[Sequence], ring: Ring | None = None, cols: int | None = None):
        rows = [list(r) for r in entries]
        if ring is None:
            ring = Ring.RAT
            for r in rows:
                for x in r:
                    rx = sc.ring_of(x)
                    if rx is Ring.QUAT or (rx is Ring.GAUSS and ring is Ring.RAT):
                        ring = rx
        ncols = len(rows[0]) if rows else (cols or 0)
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_e", tuple(tuple(sc.coerce(x, ring) for x in r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # construction -----------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int, ring: Ring = Ring.RAT) -> "Mat":
        z = sc.zero(ring)
        return cls([[z] * cols for _ in range(rows)], ring, cols=cols)

    @classmethod
    def identity(cls, n: int, ring: Ring = Ring.RAT) -> "Mat":
        z, o = sc.zero(ring), sc.one(ring)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], ring)

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, value=1, ring: Ring | None = None) -> "Mat":
        ring = ring or sc.ring_of(value)
        z = sc.zero(ring)
        e = [[z] * cols for _ in range(rows)]
        e[i][j] = sc.coerce(value, ring)
        return cls(e, ring, cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], ring: Ring | None = None, rows: int | None = None) -> "Mat":
        if not columns:
            return cls([[]] * (rows or 0), ring or Ring.RAT, cols=0) if rows else cls([], ring or Ring.RAT, cols=0)
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)], ring)

    @classmethod
    def diag(cls, values: Sequence, ring: Ring | None = None) -> "Mat":
        ring = ring or _common_ring(values)
        n = len(values)
        z = sc.zero(ring)
        return cls([[values[i] if i == j else z for j in range(n)] for i in range(n)], ring)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Mat"]]) -> "Mat":
        ring = _widest(m.ring for row in blocks for m in row)
        out = []
        for brow in blocks:
            height = brow[0].rows
            for i in range(height):
                line = []
                for m in brow:
                    line.extend(m.lift(ring)._e[i])
                out.append(line)
        return cls(out, ring)

    # access -----------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._e]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat([[self._e[i][j] for j in cols] for i in rows], self.ring, cols=len(cols))

    def lift(self, ring: Ring) -> "Mat":
        if ring is self.ring:
            return self
        return Mat(self._e, ring, cols=self.cols)

    # arithmetic -------------------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        a, b = _align(self, other)
        _check_same_shape(a, b)
        return Mat([[x + y for x, y in zip(r, s)] for r, s in zip(a._e, b._e)], a.ring, cols=a.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        a, b = _align(self, other)
        _check_same_shape(a, b)
        return Mat([[x - y for x, y in zip(r, s)] for r, s in zip(a._e, b._e)], a.ring, cols=a.cols)

    def __neg__(self) -> "Mat":
        return Mat([[-x for x in r] for r in self._e], self.ring, cols=self.cols)

    def __matmul__(self, other: "Mat") -> "Mat":
        a, b = _align(self, other)
        if a.cols != b.rows:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        bt = list(zip(*b._e)) if b.rows else [()] * b.cols
        z = sc.zero(a.ring)
        out = []
        for r in a._e:
            line = []
            for c in bt:
                s = z
                for x, y in zip(r, c):
                    if x and y:
                        s = s + x * y
                line.append(s)
            out.append(line)
        return Mat(out, a.ring, cols=b.cols)

    def scale(self, c) -> "Mat":
        """Left scalar multiple ``c*M`` (entrywise ``c*m_ij``)."""
        ring = _widest((self.ring, sc.ring_of(c)))
        c = sc.coerce(c, ring)
        return Mat([[c * x for x in r] for r in self.lift(ring)._e], ring, cols=self.cols)

    def rscale(self, c) -> "Mat":
        """Right scalar multiple ``M*c`` (entrywise ``m_ij*c``)."""
        ring = _widest((self.ring, sc.ring_of(c)))
        c = sc.coerce(c, ring)
        return Mat([[x * c for x in r] for r in self.lift(ring)._e], ring, cols=self.cols)

    def __mul__(self, c) -> "Mat":
        if isinstance(c, Mat):
            return self @ c
        return self.rscale(c)

    def __rmul__(self, c) -> "Mat":
        return self.scale(c)

    @property
    def T(self) -> "Mat":
        return Mat([list(c) for c in zip(*self._e)] if self.rows else [], self.ring, cols=self.rows)

    def conj_transpose(self) -> "Mat":
        return Mat([[sc.conj(x) for x in c] for c in zip(*self._e)], self.ring, cols=self.rows)

    def trace(self):
        s = sc.zero(self.ring)
        for i in range(min(self.rows, self.cols)):
            s = s + self._e[i][i]
        return s

    def is_zero(self) -> bool:
        return not any(x for r in self._e for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def power(self, k: int) -> "Mat":
        out = Mat.identity(self.rows, self.ring)
        for _ in range(k):
            out = out @ self
        return out

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + list(e) for r, e in zip(self._e, Mat.identity(n, self.ring)._e)]
        red, pivots = _rref(aug, self.ring, ncols=n)
        if len(pivots) != n:
            raise ZeroDivisionError("matrix is singular")
        return Mat([r[n:] for r in red[:n]], self.ring, cols=n)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self._e, other._e) for x, y in zip(r, s)
        )

    def __hash__(self):
        return hash((self.shape, self._e))

    def __repr__(self):
        body = "; ".join(", ".join(sc.format_scalar(x) for x in r) for r in self._e)
        return f"Mat[{self.ring.value}]({self.rows}x{self.cols}: {body})"


def _widest(rings: Iterable[Ring]) -> Ring:
    out = Ring.RAT
    for r in rings:
        if r is Ring.QUAT:
            return Ring.QUAT
        if r is Ring.GAUSS:
            out = Ring.GAUSS
    return out


def _common_ring(values) -> Ring:
    return _widest(sc.ring_of(v) for v in values)


def _align(a: Mat, b: Mat) -> tuple[Mat, Mat]:
    ring = _widest((a.ring, b.ring))
    return a.lift(ring), b.lift(ring)


def _check_same_shape(a: Mat, b: Mat) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


# ---------------------------------------------------------------------------
# elimination

def _rref(rows: list[list], ring: Ring, ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form by left row operations.

    Only the first ``ncols`` columns are used for pivoting (the rest ride
    along, e.g. an augmented block).  Returns the reduced rows and the pivot
    columns.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    width = len(m[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = sc.inverse(m[r][c])
        m[r] = [inv * x if x else x for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [x - f * y if y else x for x, y in zip(row, pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(m: Mat) -> int:
    """Rank of ``m``; over H this is the rank of the right column module."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _rref(m.tolist(), m.ring)
    return len(pivots)


def kernel_basis(m: Mat) -> list[Mat]:
    """Basis of the right null space ``{v : m v = 0}`` as column matrices."""
    n = m.cols
    z, o = sc.zero(m.ring), sc.one(m.ring)
    if m.rows == 0:
        red, pivots = [], []
    else:
        red, pivots = _rref(m.tolist(), m.ring)
    free = [c for c in range(n) if c not in set(pivots)]
    out = []
    for f in free:
        v = [z] * n
        v[f] = o
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        out.append(Mat([[x] for x in v], m.ring))
    return out


def solve(a: Mat, b: Mat) -> Mat | None:
    """A column ``x`` with ``a x = b``, or ``None`` when no solution exists."""
    if b.cols != 1 or b.rows != a.rows:
        raise ValueError(f"solve: incompatible shapes {a.shape} and {b.shape}")
    a, b = _align(a, b)
    n = a.cols
    aug = [list(r) + [b[i, 0]] for i, r in enumerate(a._e)]
    red, pivots = _rref(aug, a.ring, ncols=n)
    for row in red[len(pivots):]:
        if row[n]:
            return None
    x = [sc.zero(a.ring)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return Mat([[v] for v in x], a.ring)


def column_space_basis(m: Mat) -> list[int]:
    """Indices of a maximal independent set of columns."""
    if m.rows == 0:
        return []
    _, pivots = _rref(m.tolist(), m.ring)
    return pivots


def realify(m: Mat) -> Mat:
    """Rational matrix of the Q-linear map underlying ``m``.

    Each entry becomes the block of left multiplication by that entry, so
    ``rank(realify(m)) == m.ring.degree * rank(m)``.
    """
    if m.ring is Ring.RAT:
        return m
    d = m.ring.degree
    out = [[Fraction(0)] * (m.cols * d) for _ in range(m.rows * d)]
    for i in range(m.rows):
        for j in range(m.cols):
            x = m[i, j]
            if not x:
                continue
            blk = sc.left_mult_matrix(x, m.ring)
            for a in range(d):
                for b in range(d):
                    out[i * d + a][j * d + b] = blk[a][b]
    return Mat(out, Ring.RAT)


def flatten(m: Mat) -> list[Fraction]:
    """All rational components of all entries, row-major."""
    out: list[Fraction] = []
    for r in m._e:
        for x in r:
            out.extend(sc.components(x, m.ring))
    return out


class SpectralProjectors:
    """Lagrange-interpolation projectors of an operator with known spectrum."""

    def __init__(self, operator: Mat, spectrum: Sequence[int], projectors: dict[int, Mat]):
        self.operator = operator
        self.spectrum = tuple(spectrum)
        self.projectors = projectors

    def __getitem__(self, eigenvalue: int) -> Mat:
        return self.projectors[eigenvalue]

    def apply_power(self, base) -> Mat:
        """``base**M`` as ``sum(base**lam * P_lam)``; needs ``base`` central or real."""
        n = self.operator.rows
        ring = _widest((self.operator.ring, sc.ring_of(base)))
        out = Mat.zeros(n, n, ring)
        for lam, p in self.projectors.items():
            if p.is_zero():
                continue
            if lam >= 0:
                factor = _pow(base, lam, ring)
            else:
                factor = _pow(sc.inverse(sc.coerce(base, ring)), -lam, ring)
            out = out + p.scale(factor)
        return out


def _pow(x, k: int, ring: Ring):
    out = sc.one(ring)
    x = sc.coerce(x, ring)
    for _ in range(k):
        out = out * x
    return out


def spectral_projectors(m: Mat, spectrum: Sequence[int]) -> SpectralProjectors:
    """Projectors ``P_lam = prod_{mu != lam} (m - mu) / (lam - mu)``.

    The spectrum is dictated by theory, never discovered.  Values absent from
    the true spectrum get zero projectors.  Raises
    :class:`NotDiagonalizableError` unless the projectors sum to the identity
    and ``m P_lam == lam P_lam`` for every ``lam``.
    """
    if not m.is_square():
        raise ValueError("spectral projectors need a square matrix")
    spec = sorted(set(int(s) for s in spectrum))
    n = m.rows
    ident = Mat.identity(n, m.ring)
    shifted = {mu: m - ident.scale(mu) for mu in spec}
    projectors = {}
    for lam in spec:
        p = ident
        for mu in spec:
            if mu != lam:
                p = (p @ shifted[mu]).scale(Fraction(1, lam - mu))
        projectors[lam] = p
    total = Mat.zeros(n, n, m.ring)
    for lam, p in projectors.items():
        total = total + p
        if m @ p != p.scale(lam):
            raise NotDiagonalizableError("operator not diagonalizable over given spectrum")
    if total != ident:
        raise NotDiagonalizableError("operator not diagonalizable over given spectrum")
    return SpectralProjectors(m, spec, projectors)


# ---------------------------------------------------------------------------
# sparse rational vectors

SparseVec = dict  # index -> nonzero Fraction


def sparse_add(acc: dict, vec: dict, coeff=1) -> dict:
    """In-place ``acc += coeff*vec`` dropping zeros; returns ``acc``."""
    if not coeff:
        return acc
    for k, v in vec.items():
        nv = acc.get(k, 0) + coeff * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def sparse_scale(vec: dict, coeff) -> dict:
    if not coeff:
        return {}
    return {k: coeff * v for k, v in vec.items()}


class SparseEchelon:
    """Incremental echelon basis of a span of sparse rational vectors.

    ``add`` reduces a vector against the current pivots.  When the vector is
    dependent, the recorded combination of previously added tags that
    produced it is returned, so the same object computes rank, kernels and
    intersections.
    """

    def __init__(self, track: bool = True):
        self.track = track
        self.pivots: dict[int, tuple[dict, dict]] = {}  # pivot index -> (vec, provenance)
        self._order: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict, provenance: dict | None = None) -> tuple[dict, dict]:
        v = dict(vec)
        prov = dict(provenance) if provenance else {}
        # pivot vectors are mutually reduced, so one pass suffices
        for k in [k for k in v if k in self.pivots]:
            f = v.get(k)
            if f:
                pv, pprov = self.pivots[k]
                sparse_add(v, pv, -f)
                if self.track:
                    sparse_add(prov, pprov, -f)
        return v, prov

    def add(self, vec: dict, tag=None) -> dict | None:
        """Insert ``vec``; returns a dependency ``{tag: coeff}`` if it reduces to zero."""
        prov = {tag: Fraction(1)} if (self.track and tag is not None) else {}
        v, prov = self.reduce(vec, prov)
        if not v:
            return prov
        k = min(v)
        inv = 1 / Fraction(v[k])
        v = {i: x * inv for i, x in v.items()}
        if self.track:
            prov = {i: x * inv for i, x in prov.items()}
        # keep pivots fully reduced against the new one
        for pk, (pv, pprov) in list(self.pivots.items()):
            f = pv.get(k)
            if f:
                sparse_add(pv, v, -f)
                if self.track:
                    sparse_add(pprov, prov, -f)
        self.pivots[k] = (v, prov)
        return None

    def contains(self, vec: dict) -> bool:
        v, _ = self.reduce(vec)
        return not v


def sparse_kernel(columns: Sequence[dict]) -> list[dict]:
    """Basis of ``{x : sum_j x_j columns[j] = 0}`` as sparse vectors indexed by column."""
    ech = SparseEchelon(track=True)
    out = []
    for j, col in enumerate(columns):
        dep = ech.add(col, tag=j)
        if dep is not None:
            out.append({k: v for k, v in dep.items() if v})
    return out


def sparse_rank(vectors: Iterable[dict]) -> int:
    ech = SparseEchelon(track=False)
    for v in vectors:
        ech.add(v)
    return ech.rank


def dense_to_sparse(vec: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(vec) if x}


def sparse_to_dense(vec: dict, n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in vec.items():
        out[i] = x
    return out
