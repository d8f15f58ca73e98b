"""Duality shifts: psi, quotient arithmetic, provenance trails and the case catalog."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from sympy import Matrix, ZZ

from swdual.shift import (NotReducible, PsiValue, UnknownTag, WrongGroup, build_case,
                          central_case_shift, exotic_picard_shift, period_of, psi,
                          quotient_order, quotient_reduce, sw_shift)


@pytest.fixture(scope="module")
def p3n2():
    return build_case("p3n2")


@pytest.fixture(scope="module")
def honda3():
    return build_case("honda", 3)


def test_psi_examples(p3n2, honda3):
    # [DERIVED] w1(rho_G12) = 0 since rho contains each sign line once with an even total
    r = psi(p3n2, p3n2.rho)
    assert r.dim == 12 and r.modulus == 3
    assert psi(p3n2, p3n2.ring.trivial()).as_tuple() == (1, 0, 0)
    assert psi(honda3, honda3.rho).as_tuple() == (12, 1, -1)
    with pytest.raises(WrongGroup):
        psi(p3n2, honda3.rho)


def test_quotient_reduce_small():
    # [DERIVED] Z + Z/2 + Z/3 modulo (12, 1, -1) has order 12 * 2 * 3 = 72 and is cyclic
    rho = PsiValue(12, 1, 2, 3)
    order, inv = quotient_order(rho)
    assert (order, inv) == (72, [1, 1, 72])
    assert quotient_reduce(rho, PsiValue(1, 0, 0, 3)) == (1, 72)
    assert quotient_reduce(rho, rho) == (0, 72)
    # [DERIVED] (4, 0, 2) = 28 * (1, 0, 0) - 2 * (12, 1, 2) in Z + Z/2 + Z/3
    c, _ = quotient_reduce(rho, PsiValue(4, 0, 2, 3))
    assert c == 28 and (-c) % 72 == 44
    with pytest.raises(WrongGroup):
        quotient_reduce(rho, PsiValue(1, None, 0, 3))


def test_not_reducible():
    # unit class generates only Z x 0 when psi(rho) has no torsion twist
    rho = PsiValue(4, 0, 0, 9)
    with pytest.raises(NotReducible):
        quotient_reduce(rho, PsiValue(0, 0, 1, 9))


@given(st.integers(1, 30), st.integers(0, 1), st.integers(0, 35))
def test_quotient_order_vs_sympy(d, w, t):
    # [DERIVED] order of the quotient via sympy's Smith form
    rho = PsiValue(d, w, t, 36)
    M = Matrix([[0, 2, 0], [0, 0, 36], [d, w, t]])
    D = sympy_snf(M, domain=ZZ)
    expect = 1
    for i in range(3):
        expect *= abs(int(D[i, i]))
    assert quotient_order(rho)[0] == expect


@settings(max_examples=30)
@given(st.integers(-5, 5), st.integers(-5, 5))
def test_representative_independent(a, b):
    # adding multiples of psi(rho) does not change c
    rho = PsiValue(12, 1, 2, 3)
    W = PsiValue(7, 1, 1, 3)
    c0 = quotient_reduce(rho, W)
    shifted = W + a * rho + b * PsiValue(0, 1, 1, 3) + b * PsiValue(0, 1, 2, 3)
    assert quotient_reduce(rho, shifted) == c0


def test_periods():
    assert period_of("p3n2", "G12") == 72
    assert period_of("p2n2", "G24") == 192
    assert period_of("honda", "C5", 5) == 50
    assert period_of("honda", "G", 5) == 800
    with pytest.raises(UnknownTag):
        period_of("p3n2", "C7")


@pytest.mark.parametrize("case,p,shift,period", [
    ("p3n2", None, 44, 72), ("p2n2", None, 44, 192),
    ("honda", 3, 44, 72), ("honda", 5, 624, 800)])
def test_shift_values(case, p, shift, period):
    r = sw_shift(case, p)
    assert (r.shift, r.period) == (shift, period)
    n_inputs = len(r.paper_inputs())
    assert n_inputs == (2 if case == "p2n2" else 0)
    provs = {s.provenance for s in r.trail}
    assert provs <= {"computed", "paper-input", "rule"}


def test_honda_signed_forms():
    # [PAPER] -n^2(2p+1)
    assert sw_shift("honda", 3).signed == -28
    assert sw_shift("honda", 5).signed == -176


def test_p3n2_agrees_with_honda3():
    assert sw_shift("p3n2").shift % 72 == sw_shift("honda", 3).shift % 72


def test_central():
    assert central_case_shift(2).shift == -4
    assert central_case_shift(3).signed == -9
    with pytest.raises(ValueError):
        central_case_shift(0)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_congruence(p):
    n = p - 1
    assert (-n * n * (1 + 2 * p) + (p * p + 1)) % (2 * p * p) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_exotic(p):
    r = exotic_picard_shift(p)
    assert r.signed == p * p + p
    assert r.shift == (p * p + p) % (2 * p * p)
    assert len(r.paper_inputs()) == 2
    with pytest.raises(ValueError):
        exotic_picard_shift(4)


def test_exotic_from_computed_dual():
    d = sw_shift("honda", 3)
    r = exotic_picard_shift(3, dual=d)
    assert r.signed == 12
    assert any(s.step == "D(E^hG) shift" and s.provenance == "computed" for s in r.trail)
