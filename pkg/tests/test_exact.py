"""Exact algebra against sympy and numerical oracles."""
import cmath
import itertools
import math
from fractions import Fraction

import pytest
import sympy
from sympy import GF
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from sympy.polys.matrices import DomainMatrix
from hypothesis import given
from hypothesis import strategies as st

from swdual.exact.cyclotomic import Cyclo, cyclotomic_poly
from swdual.exact.fp import nullspace, rank
from swdual.exact.intmat import (det, hermite_normal_form, invariant_factors, matmul,
                                 smith_normal_form, solve_rational)
from swdual.exact.symfun import (MPoly, NotSymmetric, elementary, expand_in_t,
                                 monomial_symmetric, newton_eval, newton_s_k, power_sum,
                                 sym_to_elementary)

small = st.integers(-6, 6)


def matrices(rmin=1, rmax=4):
    return st.integers(rmin, rmax).flatmap(
        lambda r: st.integers(rmin, rmax).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


# -- integer matrices ----------------------------------------------------------

@given(matrices())
def test_snf_is_a_factorization(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(matrices())
def test_snf_matches_sympy(M):
    # [DERIVED] invariant factors from sympy's smith_normal_form
    ref = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    want = sorted(abs(ref[i, i]) for i in range(min(ref.shape)))
    assert sorted(invariant_factors(M)) == want


def test_snf_example():
    # [TRIVIAL] diag(2, 4) from [[2, 0], [0, 4]] and (1, 6) from [[2, 0], [0, 3]]
    assert invariant_factors([[2, 0], [0, 4]]) == [2, 4]
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(M):
    assert det(M) == sympy.Matrix(M).det()


@given(matrices(2, 4))
def test_hnf_same_lattice(M):
    H = hermite_normal_form(M)
    # rows of H and M span the same lattice: each side solves integrally in the other
    S = sympy.Matrix(M)
    if H:
        assert sympy.Matrix(H).rank() == S.rank()
    assert hermite_normal_form(H) == H


def test_solve_rational():
    A = [[2, 1], [1, 3]]
    x = solve_rational(A, [3, 5])
    assert x == [Fraction(4, 5), Fraction(7, 5)]


# -- F_p linear algebra ---------------------------------------------------------

@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.lists(st.integers(0, 6), min_size=5, max_size=5),
                                               min_size=1, max_size=6))
def test_rank_and_nullspace_mod_p(p, rows):
    sparse = [{j: v for j, v in enumerate(r) if v % p} for r in rows]
    r = rank(sparse, p)
    # [DERIVED] rank over GF(p) by sympy's DomainMatrix
    dm = DomainMatrix([[GF(p)(v) for v in row] for row in rows], (len(rows), 5), GF(p))
    assert r == dm.rank()
    ns = nullspace(sparse, 5, p)
    assert len(ns) == 5 - r
    for v in ns:
        for row in rows:
            assert sum(row[j] * v.get(j, 0) for j in range(5)) % p == 0


# -- cyclotomic values ------------------------------------------------------------

def _num(v: Cyclo) -> complex:
    return sum(a * cmath.exp(2j * cmath.pi * i / v.N) for i, a in enumerate(v.c))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 9, 12, 15, 36])
def test_cyclotomic_poly_matches_sympy(n):
    x = sympy.symbols("x")
    ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in ref]


cyclo = st.sampled_from([4, 6, 12, 20]).flatmap(
    lambda N: st.lists(st.integers(-3, 3), min_size=N, max_size=N).map(lambda c: Cyclo(N, c)))


@given(cyclo, cyclo)
def test_cyclo_arithmetic_numerically(a, b):
    if a.N != b.N:
        return
    assert abs(_num(a + b) - (_num(a) + _num(b))) < 1e-9
    assert abs(_num(a * b) - _num(a) * _num(b)) < 1e-8
    assert abs(_num(a.conj()) - _num(a).conjugate()) < 1e-9
    assert (a == b) == (abs(_num(a) - _num(b)) < 1e-9)


def test_cyclo_equality_modulo_phi():
    # 1 + z + z^2 = 0 for N = 3
    assert Cyclo(3, [1, 1, 1]) == Cyclo.integer(3, 0)
    assert Cyclo.root(12, 6) == Cyclo.integer(12, -1)
    assert Cyclo.root(4, 1).lift(12) == Cyclo.root(12, 3)


# -- symmetric functions ------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 7))
def test_newton_against_sympy(k):
    # [DERIVED] s_k(t) in terms of e_i(t) by expansion in k variables
    ts = sympy.symbols(f"t0:{k}")
    es = [sympy.Add(*[sympy.Mul(*c) for c in itertools.combinations(ts, i)])
          for i in range(1, k + 1)]
    s = newton_s_k(k)
    expr = 0
    for mono, c in s.terms.items():
        expr += int(c) * sympy.Mul(*[e**a for e, a in zip(es, mono)])
    assert sympy.expand(expr - sum(t**k for t in ts)) == 0


@given(st.integers(1, 6), st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_newton_eval_power_sums(k, roots):
    # c_i = e_i(roots); s_k(c) = sum roots^k
    m = len(roots)
    c = [sum(math.prod(S) for S in itertools.combinations(roots, i))
         for i in range(1, m + 1)]
    assert newton_eval(k, c) == sum(r**k for r in roots)


@pytest.mark.parametrize("m,k", [(3, 2), (4, 3), (3, 4), (4, 4)])
def test_sym_to_elementary_round_trip(m, k):
    f = power_sum(m, k)
    g = sym_to_elementary(f)
    assert expand_in_t(g, m) == f


def test_sym_to_elementary_examples():
    # p_2 = e1^2 - 2 e2 in three variables
    g = sym_to_elementary(power_sum(3, 2))
    assert g.terms == {(2, 0, 0): 1, (0, 1, 0): -2}
    with pytest.raises(NotSymmetric):
        sym_to_elementary(MPoly.var(2, 0))


def test_monomial_symmetric_count():
    f = monomial_symmetric((2, 1, 0))
    assert len(f.terms) == 6
    assert len(elementary(5, 2).terms) == math.comb(5, 2)
