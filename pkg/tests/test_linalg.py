import json
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, strategies as st

from parabolica import scalars as sc
from parabolica.linalg import (Mat, NotDiagonalizableError, SparseEchelon, kernel_basis, rank, realify, solve,
                               sparse_kernel, spectral_projectors)
from parabolica.scalars import Gauss, Quat, Ring

rats = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gauss = st.builds(Gauss, rats, rats)
quats = st.builds(Quat, rats, rats, rats, rats)
RINGS = {Ring.RAT: rats, Ring.GAUSS: gauss, Ring.QUAT: quats}


def mats(ring, max_rows=4, max_cols=4):
    elems = RINGS[ring]
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=r, max_size=r)
        )).map(lambda rows: Mat(rows, ring))


# scalars ---------------------------------------------------------------------

@given(quats, quats, quats)
def test_quaternion_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(quats)
def test_quaternion_two_sided_inverse(a):
    if a == sc.zero(Ring.QUAT):
        return
    inv = sc.inverse(a)
    assert a * inv == sc.one(Ring.QUAT) == inv * a


@given(gauss, gauss)
def test_gauss_field_axioms(a, b):
    assert a * b == b * a
    if b != sc.zero(Ring.GAUSS):
        assert (a * sc.inverse(b)) * b == a


@given(quats, quats)
def test_conjugation_is_involutive_anti_automorphism(a, b):
    assert sc.conj(sc.conj(a)) == a
    assert sc.conj(a * b) == sc.conj(b) * sc.conj(a)


@given(gauss, gauss)
def test_gauss_conjugation(a, b):
    assert sc.conj(sc.conj(a)) == a
    assert sc.conj(a * b) == sc.conj(a) * sc.conj(b)


def test_quaternion_units():
    assert sc.QI * sc.QJ == sc.QK
    assert sc.QJ * sc.QI == -sc.QK
    assert sc.QI * sc.QI == -sc.one(Ring.QUAT)


def test_parse_and_format_round_trip():
    for text in ("1", "-1/2", "1 + i", "2*j", "1 + k", "1/3 - 2/5*i + j - k"):
        x = sc.parse_scalar(text)
        assert sc.parse_scalar(sc.format_scalar(x)) == x


# rank, kernel, solve -----------------------------------------------------------

def test_rank_trivial_cases():
    assert rank(Mat.identity(2)) == 2
    assert rank(Mat.zeros(3, 4)) == 0


def test_kernel_trivial_cases():
    assert kernel_basis(Mat.identity(3)) == []
    ker = kernel_basis(Mat.zeros(2, 2))
    assert len(ker) == 2 and rank(Mat.from_columns([k.column(0) for k in ker])) == 2


def test_kernel_of_rank_one_matrix():
    # hand elimination: x + y = 0
    ker = kernel_basis(Mat([[1, 1], [2, 2]]))
    assert len(ker) == 1
    v = ker[0].column(0)
    assert v[0] == -v[1] != 0


def test_solve_examples():
    b = Mat([[Fraction(3)], [Fraction(-7, 2)]])
    assert solve(Mat.identity(2), b) == b
    a = Mat([[1, 1], [2, 2]])
    assert solve(a, Mat([[1], [3]])) is None
    x = solve(a, Mat([[1], [2]]))
    assert x is not None and a @ x == Mat([[1], [2]])


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        solve(Mat.identity(2), Mat([[1], [2], [3]]))


def test_quaternion_rank_matches_golden_oracle():
    data = json.loads((resources.files("parabolica") / "data" / "golden" / "linalg.json").read_text())
    for name, case in data["quaternion_rank"].items():
        m = Mat([[sc.parse_scalar(t) for t in row] for row in case["rows"]], Ring.QUAT)
        assert rank(m) == case["rank"], name


def test_quaternion_columns_are_a_right_module():
    # second column = first column times k on the right: rank 1 over H
    col = [sc.QI, sc.QJ]
    m = Mat([[x, x * sc.QK] for x in col], Ring.QUAT)
    assert rank(m) == 1
    # a left multiple of a column is a different right line in general
    col = [sc.one(Ring.QUAT), sc.QI]
    m2 = Mat([[x, sc.QK * x] for x in col], Ring.QUAT)
    assert rank(m2) == 2


@pytest.mark.parametrize("ring", list(Ring))
@given(data=st.data())
def test_rank_nullity(ring, data):
    m = data.draw(mats(ring))
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert (m @ v).is_zero()


@pytest.mark.parametrize("ring", [Ring.GAUSS, Ring.QUAT])
@given(data=st.data())
def test_realification_multiplies_rank_by_degree(ring, data):
    m = data.draw(mats(ring, 3, 3))
    assert rank(realify(m)) == ring.degree * rank(m)


@pytest.mark.parametrize("ring", [Ring.GAUSS, Ring.QUAT])
@given(data=st.data())
def test_realification_is_multiplicative(ring, data):
    a = data.draw(mats(ring, 3, 3))
    b = Mat([[data.draw(RINGS[ring]) for _ in range(2)] for _ in range(a.cols)], ring)
    assert realify(a @ b) == realify(a) @ realify(b)


# spectral projectors ------------------------------------------------------------

def test_projectors_of_diagonal():
    p = spectral_projectors(Mat.diag([2, -2]), [2, -2])
    assert p[2] == Mat.diag([1, 0]) and p[-2] == Mat.diag([0, 1])
    assert spectral_projectors(Mat.identity(3), [1])[1] == Mat.identity(3)


def test_projectors_of_ad_A_on_sl2():
    # ad(A) in the basis (Z, A, X) is diag(2, 0, -2); direct kernels are the coordinate lines
    ad = Mat.diag([2, 0, -2])
    p = spectral_projectors(ad, [2, 0, -2])
    for lam in (2, 0, -2):
        assert rank(p[lam]) == 1
        ker = kernel_basis(ad - Mat.identity(3).scale(lam))
        assert rank(Mat.from_columns([k.column(0) for k in ker] + [p[lam].column(j) for j in range(3)])) == 1


def test_projectors_reject_non_diagonalizable():
    with pytest.raises(NotDiagonalizableError, match="not diagonalizable"):
        spectral_projectors(Mat([[1, 1], [0, 1]]), [1])
    with pytest.raises(NotDiagonalizableError):
        spectral_projectors(Mat.diag([1, 3]), [1, 2])


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=5), st.integers(0, 10 ** 6))
def test_projector_identities(eigs, seed):
    import random
    rng = random.Random(seed)
    n = len(eigs)
    while True:
        s = Mat([[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        if rank(s) == n:
            break
    m = s @ Mat.diag(eigs) @ s.inverse()
    p = spectral_projectors(m, range(-2, 3))
    total = Mat.zeros(n, n)
    for lam in range(-2, 3):
        total = total + p[lam]
        assert p[lam] @ p[lam] == p[lam]
        assert m @ p[lam] == p[lam].scale(lam)
        for mu in range(-2, 3):
            if mu != lam:
                assert (p[lam] @ p[mu]).is_zero()
        # columns of P_lam span ker(m - lam)
        assert rank(p[lam]) == len(kernel_basis(m - Mat.identity(n).scale(lam)))
    assert total == Mat.identity(n)


# sparse helpers ----------------------------------------------------------------------

@given(st.lists(st.lists(rats, min_size=4, max_size=4), min_size=1, max_size=6))
def test_sparse_kernel_agrees_with_dense(rows):
    cols = [{i: v for i, v in enumerate(r) if v} for r in rows]
    dense = Mat([[rows[j][i] for j in range(len(rows))] for i in range(4)])
    ker = sparse_kernel(cols)
    assert len(ker) == len(kernel_basis(dense))
    for dep in ker:
        total = {}
        for j, c in dep.items():
            for i, v in cols[j].items():
                total[i] = total.get(i, 0) + c * v
        assert not any(total.values())
    ech = SparseEchelon(track=False)
    for c in cols:
        ech.add(c)
    assert ech.rank == rank(dense)
