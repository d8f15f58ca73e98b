"""Chern classes, lambda, ch_k, Stiefel-Whitney on Q8 and the Wu congruence."""
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from swdual.charclasses import (IndexOutOfRange, NoDecomposition, NotSpinnable, TooManyVariables,
                                chern_character_k, chern_on_cyclic, complex_structure,
                                lambda_on_cyclic, lambda_on_detector, lambda_on_group, q8_lambda_table,
                                q8_w1_of_line, table_consistent, total_sw, wu_congruence_check)
from swdual.cohomology import Q8Model
from swdual.groups import make_cyclic
from swdual.orders import finite_units, order_lipschitz
from swdual.reps import (character_table, order_conjugation_rep, order_left_rep, real_ring,
                         make_honda_group)
from swdual.shift import build_case


def chern_oracle(mults, k):
    # [DERIVED] expand prod (1 + m z) with sympy, reduce coefficients mod k
    z = sympy.symbols("z")
    P = sympy.Poly(sympy.prod([1 + m * z for m in mults]), z)
    cs = P.all_coeffs()[::-1][1:]
    cs = cs + [0] * (len(mults) - len(cs))
    return tuple(int(c) % k for c in cs)


@given(st.integers(2, 12).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.integers(0, k - 1), max_size=6))))
def test_chern_matches_expansion(data):
    k, mults = data
    assert chern_on_cyclic(mults, k).coeffs == chern_oracle(mults, k)


@given(st.integers(2, 12), st.lists(st.integers(0, 11), max_size=4),
       st.lists(st.integers(0, 11), max_size=4))
def test_whitney_sum(k, a, b):
    a, b = [x % k for x in a], [x % k for x in b]
    s = chern_on_cyclic(a, k) + chern_on_cyclic(b, k)
    assert s.coeffs == chern_on_cyclic(a + b, k).coeffs


def test_chern_examples():
    assert chern_on_cyclic([3], 7).c(1) == 3
    H = chern_on_cyclic([1, 3], 4)
    assert (H.c(1), H.c(2)) == (0, 3)
    for p in (3, 5, 7):
        assert chern_on_cyclic(range(1, p), p).c(1) == 0


def test_lambda_examples():
    # gamma_3 = C(1) as a real rep of C3: lambda = d c1 - c2 with 2d = 1 mod 3
    assert lambda_on_cyclic([1], 3) == 2
    # H on C4: spectrum {i, -i} twice in the complexification -> one line C(1) as complex
    spec = [0, 2, 0, 2]
    assert lambda_on_cyclic(complex_structure(spec, 4), 4) == 1
    assert lambda_on_cyclic([], 5) == 0


@given(st.sampled_from([4, 6, 8, 12]), st.data())
def test_spin_choices_agree(k, data):
    mults = data.draw(st.lists(st.integers(1, k - 1), max_size=5))
    c1 = sum(mults) % k
    if c1 % 2:
        with pytest.raises(NotSpinnable):
            lambda_on_cyclic(mults, k)
        return
    ds = [t for t in range(k) if (2 * t - c1) % k == 0]
    vals = {lambda_on_cyclic(mults, k, d) for d in ds}
    assert len(vals) == 1
    assert lambda_on_cyclic(mults, k) in vals


def test_complex_structure_errors():
    with pytest.raises(NotSpinnable):
        complex_structure([0, 0, 1, 0], 4)
    with pytest.raises(NoDecomposition):
        complex_structure([0, 1, 0, 0], 4)
    assert complex_structure([3, 1, 2, 1], 4) == [1, 2]


# -- lambda tables -----------------------------------------------------------------------

def test_q8_regular_on_detector():
    # [PAPER] rho_Q8 = H_ad + H in RO(Q8), so lambda(rho_Q8) = 2 + 1 = 3 (checked mod 4 on <i>)
    U = finite_units(order_lipschitz())
    ring = real_ring(U.group)
    H = order_left_rep(U).real_class
    Had = order_conjugation_rep(U).real_class
    ci = U.named({"i": 1})
    assert ring.regular() == Had + H
    assert lambda_on_detector(ring.regular(), ci) == 3
    assert lambda_on_detector(H, ci) == 1


def test_g24_table():
    C = build_case("p2n2")
    t = C.extra["table"]
    ring = C.ring
    assert table_consistent(t)
    # [PAPER] rho_G24 -> 9 lambda(H) = lambda(H); lambda(H_ad) = 2
    assert lambda_on_group(t, ring.regular()) == 1
    assert lambda_on_group(t, C.extra["H_ad"]) == 2
    # [DERIVED] theta, the 2-dim real rep inflated from C3, restricts trivially to Q8
    theta = next(R for R in ring.irreps if R.dim == 2)
    assert t.values[theta.index] == 0
    assert t.provenance.count("paper-seeded") == 2


# -- ch_k ---------------------------------------------------------------------------------

@pytest.mark.parametrize("p,e", [(3, 2), (5, 3), (7, 3)])
def test_chern_character(p, e):
    n = p - 1
    G = make_honda_group(p, e)
    ring = real_ring(G)
    z = G.generators["z"]
    assert chern_character_k(ring.regular(), n, z) == (-n // 2) % p
    assert chern_character_k(ring.trivial(), n, z) == 0
    sigma = next(R for R in ring.irreps if R.dim == 1 and R.index != 0 and R.kind == "real")
    assert chern_character_k(ring.basis(sigma.index), n, z) == 0
    with pytest.raises(IndexOutOfRange):
        chern_character_k(ring.regular(), p, z)
    # odd k vanish on real classes
    for k in range(1, n, 2):
        assert chern_character_k(ring.regular(), k, z) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_alpha_chern_character(p):
    # [PAPER] c1(alpha_m)^n / n! = -z for every m
    n = p - 1
    C = make_cyclic(p)
    ring = real_ring(C)
    for R in ring.irreps[1:]:
        assert chern_character_k(ring.basis(R.index), n, 1) == p - 1
    # Wilson: n! = -1 mod p
    assert math.factorial(n) % p == p - 1


@given(st.data())
def test_ch_additive(data):
    G = make_honda_group(5, 3)
    ring = real_ring(G)
    z = G.generators["z"]
    k = len(ring.irreps)
    a = sum((c * ring.basis(i) for i, c in enumerate(
        data.draw(st.lists(st.integers(0, 2), min_size=k, max_size=k)))), ring.zero())
    b = sum((c * ring.basis(i) for i, c in enumerate(
        data.draw(st.lists(st.integers(-2, 2), min_size=k, max_size=k)))), ring.zero())
    for kk in (2, 4):
        assert chern_character_k(a + b, kk, z) == \
            (chern_character_k(a, kk, z) + chern_character_k(b, kk, z)) % 5


# -- Stiefel-Whitney on Q8 -----------------------------------------------------------------

def test_total_sw_q8():
    U = finite_units(order_lipschitz())
    G = U.group
    ring = real_ring(G)
    i, j = U.named({"i": 1}), U.named({"j": 1})
    a, b, P = Q8Model.gen("a"), Q8Model.gen("b"), Q8Model.gen("P")
    one = Q8Model.one()
    Had = order_conjugation_rep(U).real_class
    # [PAPER] (1+a)(1+b)(1+a+b) = 1
    assert total_sw(Had, i, j) == one
    assert total_sw(ring.trivial(), i, j) == one
    t = character_table(G)
    for chi in t.irreducibles[1:4]:
        ker_i = chi(i).to_int() == 1
        w = q8_w1_of_line(chi, i, j)
        # a is dual to i (a(i) = 1), so the line trivial on i has w1 = b
        assert w == (b if ker_i else (a if chi(j).to_int() == 1 else a + b))
    H = order_left_rep(U).real_class
    assert total_sw(H, i, j) == one + P
    assert total_sw(Had + H, i, j) == total_sw(Had, i, j) * total_sw(H, i, j)
    with pytest.raises(NoDecomposition):
        total_sw(Had - H, i, j)
    with pytest.raises(NoDecomposition):
        total_sw(real_ring(make_cyclic(8)).trivial(), 1, 2)


# -- Wu ------------------------------------------------------------------------------------

@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_wu_grid(p, n):
    r = wu_congruence_check(p, n)
    assert r.ok
    assert r.reduced.terms == r.target.terms


def test_wu_examples():
    # [DERIVED] p=5, n=1: q1 = e1^2 - 2 e2 = 3 e2 mod (5, e1)
    assert wu_congruence_check(5, 1).reduced.terms == {(0, 1): 3}
    assert wu_congruence_check(5, 2).reduced.terms == {(0, 0, 0, 1): 2}
    with pytest.raises(TooManyVariables):
        wu_congruence_check(7, 3)
