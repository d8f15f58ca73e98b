"""Bar-complex cohomology: dimensions, products, restriction and transfer."""
import itertools
import random

from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from swdual.cohomology import (BadMultiplier, CohClass, CyclicIntegral, Q8Model, TooLarge,
                               bar_cohomology, conjugation_action, cup, invariants_model,
                               lambda_tensor_poly_dims, q8_c3_action, restriction, transfer, z0)
from swdual.groups import direct_product, make_cyclic, make_g12, make_g24, make_quaternion
from swdual.suites import restriction_cyclic


@pytest.mark.parametrize("k,p", [(2, 2), (3, 3), (4, 2), (5, 5), (6, 3), (6, 2), (5, 3)])
def test_cyclic_dims(k, p):
    # [DERIVED] H^j(C_k; F_p) = F_p for all j iff p | k
    d = bar_cohomology(make_cyclic(k), p, 3).dims()
    assert d == ((1, 1, 1, 1) if k % p == 0 else (1, 0, 0, 0))


def test_q8_dims():
    # [PAPER] A (x) F2[P] with A of dims 1,2,2,1
    assert bar_cohomology(make_quaternion(), 2, 4).dims() == (1, 2, 2, 1, 1)
    assert Q8Model.graded_dims(8) == (1, 2, 2, 1, 1, 2, 2, 1, 1)


def brute_monomials(nv, nw, d):
    # [DERIVED] count exterior x polynomial monomials directly
    n = 0
    for S in itertools.product((0, 1), repeat=nv):
        rest = d - sum(S)
        if rest >= 0 and rest % 2 == 0:
            n += sum(1 for T in itertools.product(range(rest // 2 + 1), repeat=nw)
                     if sum(T) == rest // 2)
    return n


@pytest.mark.parametrize("nv,nw", [(2, 2), (3, 1), (4, 4), (1, 0)])
def test_lambda_tensor_poly_dims(nv, nw):
    assert lambda_tensor_poly_dims(nv, nw, 6) == tuple(brute_monomials(nv, nw, d)
                                                       for d in range(7))


def test_elementary_abelian():
    E = direct_product(make_cyclic(3), make_cyclic(3))
    assert bar_cohomology(E, 3, 3).dims() == lambda_tensor_poly_dims(2, 2, 3) == (1, 2, 3, 4)


@lru_cache(maxsize=None)
def _c3xc3():
    return bar_cohomology(direct_product(make_cyclic(3), make_cyclic(3)), 3, 3)


@lru_cache(maxsize=None)
def _g12_pair():
    G = make_g12()
    sub = G.subgroup(gens=[G.generators["s"]])
    return sub, bar_cohomology(G, 3, 3), bar_cohomology(sub.group, 3, 3)


def _rand_class(cx, k, rng):
    return CohClass(cx, k, tuple(rng.randrange(cx.p) for _ in range(cx.dim(k))))


@given(st.integers(0, 10**6))
def test_cup_graded_commutative_and_associative(seed):
    rng = random.Random(seed)
    cx = _c3xc3()
    x, y, z = (_rand_class(cx, 1, rng) for _ in range(3))
    assert cup(x, y) == -cup(y, x)
    assert cup(cup(x, y), z) == cup(x, cup(y, z))
    assert cup(x, x).is_zero()


def test_q8_ring_relations():
    # cup products on the bar complex agree with the model's relations in low degree
    cx = bar_cohomology(make_quaternion(), 2, 3)
    a, b = cx.gens(1)
    assert (cup(a, a) + cup(a, b) + cup(b, b)).is_zero()
    assert cup(cup(a, a), b) == cup(cup(a, b), b)
    A, B = Q8Model.gen("a"), Q8Model.gen("b")
    assert A * A + A * B + B * B == Q8Model()
    assert A * A * B == A * B * B
    x = A + B * Q8Model.gen("P")
    assert q8_c3_action(q8_c3_action(q8_c3_action(x))) == x


def test_restriction_cyclic_pattern():
    # odd degrees restrict to zero; degree 2 carries the integral class and survives
    assert restriction_cyclic(3, 2) == {1: True, 2: False, 3: True}
    assert restriction_cyclic(2, 2) == {1: True, 2: False, 3: True}


@pytest.mark.parametrize("G,gen,p", [(make_g12(), "s", 3), (make_quaternion(), "i", 2),
                                     (make_cyclic(9), "g^3", 3)])
def test_transfer_restriction_is_index(G, gen, p):
    sub = G.subgroup(gens=[G.generators[gen] if gen in G.generators else G.names.index(gen)])
    cG, cH = bar_cohomology(G, p, 3), bar_cohomology(sub.group, p, 3)
    for k in range(4):
        for x in (cG.gens(k) if k else [cG.one()]):
            assert transfer(cH, cG, sub, restriction(cG, cH, sub, x)) == x.scale(sub.index)


@given(st.integers(0, 10**6))
def test_frobenius_reciprocity(seed):
    rng = random.Random(seed)
    sub, cG, cH = _g12_pair()
    a, b = rng.choice([(0, 2), (1, 2), (2, 0), (1, 0), (2, 1), (0, 3)])
    x = _rand_class(cH, a, rng) if a else cH.one().scale(rng.randrange(3))
    y = _rand_class(cG, b, rng) if b else cG.one()
    lhs = transfer(cH, cG, sub, cup(x, restriction(cG, cH, sub, y)))
    assert lhs == cup(transfer(cH, cG, sub, x), y)


def test_inner_conjugation_trivial():
    G = make_quaternion()
    cx = bar_cohomology(G, 2, 3)
    for k in (1, 2, 3):
        for x in cx.gens(k):
            for g in range(G.order):
                assert conjugation_action(cx, g, x) == x


def test_c3_acts_on_q8_by_automorphism():
    # [PAPER] the C3 of G24 permutes a, b, a+b in H^1(Q8)
    G = make_g24()
    q8 = G.subgroup([g for g in range(G.order) if G.element_orders[g] in (1, 2, 4)])
    cx = bar_cohomology(q8.group, 2, 1)
    w = G.generators["w"]
    imgs = {conjugation_action(cx, w, x, G, q8.embedding) for x in cx.gens(1)}
    assert len(imgs) == 2 and all(not x.is_zero() for x in imgs)
    x = cx.gens(1)[0]
    y = x
    for _ in range(3):
        y = conjugation_action(cx, w, y, G, q8.embedding)
    assert y == x


def test_invariants_model():
    # C_{p-1} acting faithfully on H^2(C_p) leaves z0^{p-1}
    R = invariants_model(5, 4, 2)
    assert R.exponent == 4 and R.generator_degree == 8
    assert R.invariant_degrees(16) == [0, 8, 16]
    with pytest.raises(BadMultiplier):
        invariants_model(5, 4, 0)
    with pytest.raises(BadMultiplier):
        invariants_model(7, 2, 3)


def test_cyclic_integral():
    z = z0(9)
    assert (z * z).coeff(2) == 1
    assert CyclicIntegral.make(9, {1: 9}).terms == ()
    assert (z + z).coeff(1) == 2


def test_too_large():
    with pytest.raises(TooLarge):
        bar_cohomology(make_g24(), 2, 6)
