"""Character tables, real representation rings, induction and conjugation reps."""
import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swdual.exact.cyclotomic import Cyclo
from swdual.groups import (make_cyclic, make_g12, make_g24, make_metacyclic, make_quaternion,
                           direct_product)
from swdual.orders import finite_units, order_hurwitz, order_lipschitz, order_p3
from swdual.reps import (NotAClassFunction, NotStable, character_from_matrices, character_table,
                         det_character, extend_to_group, honda_conjugation_rep, induce,
                         make_honda_group, order_conjugation_rep, order_left_rep, real_ring,
                         regular_decomposition, restrict, restrict_real)

GROUPS = [make_cyclic(7), make_quaternion(), make_g12(), make_g24(),
          make_metacyclic(5, 16, 2), direct_product(make_cyclic(3), make_cyclic(3))]


def num(v: Cyclo) -> complex:
    return sum(a * cmath.exp(2j * cmath.pi * i / v.N) for i, a in enumerate(v.c))


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.label)
def test_table_numerically_orthonormal(G):
    # [DERIVED] floating-point inner products over all elements
    t = character_table(G)
    assert len(t.irreducibles) == len(G.classes)
    assert sum(x.degree ** 2 for x in t.irreducibles) == G.order
    vals = np.array([[num(x(g)) for g in range(G.order)] for x in t.irreducibles])
    gram = vals @ vals.conj().T / G.order
    assert np.allclose(gram, np.eye(len(vals)), atol=1e-9)
    assert t.orthogonality_ok() and t.column_orthogonality_ok()
    assert t.irreducibles[0] == t.trivial()
    degs = [x.degree for x in t.irreducibles]
    assert degs == sorted(degs)


def test_cyclic_table():
    # [TRIVIAL] C_k: k linear characters g -> zeta^{jk}
    G = make_cyclic(6)
    t = character_table(G)
    got = {tuple(x(g) for g in range(6)) for x in t.irreducibles}
    want = {tuple(Cyclo.root(6, j * g) for g in range(6)) for j in range(6)}
    assert got == want


def test_g24_dims_and_metacyclic():
    # [PAPER] dims 1,1,1,2,2,2,3
    assert [x.degree for x in character_table(make_g24()).irreducibles] == [1, 1, 1, 2, 2, 2, 3]
    # [DERIVED] C5 x| C16: 16 linear + 4 of dim 4, the latter induced from C5 x C4
    G = make_metacyclic(5, 16, 2)
    t = character_table(G)
    assert [x.degree for x in t.irreducibles] == [1] * 16 + [4] * 4
    A = G.subgroup([a * 16 + j for a in range(5) for j in range(0, 16, 4)])
    tA = character_table(A.group)
    nonlin = {induce(x, A) for x in tA.irreducibles if any(x(g) != x.degree for g in
                                                              [A.embedding.index(16)])}
    assert {x for x in t.irreducibles if x.degree == 4} == {chi for chi in nonlin
                                                            if chi.inner(chi) == 1}


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.label)
def test_frobenius_schur(G):
    t = character_table(G)
    ring = real_ring(G)
    for x in t.irreducibles:
        fs = t.fs_indicator(x)
        assert fs in (-1, 0, 1)
        assert (fs == 0) == (not x.is_real())
    # regular rep: real multiplicity = dim over the endomorphism algebra
    reg = ring.regular()
    for c, R in zip(reg.coeffs, ring.irreps):
        d_end = {"real": 1, "complex": 2, "quaternionic": 4}[R.kind]
        assert c == R.dim // d_end


def test_q8_real_irreducibles():
    ring = real_ring(make_quaternion())
    assert [R.dim for R in ring.irreps] == [1, 1, 1, 1, 4]
    assert ring.irreps[-1].kind == "quaternionic" and ring.irreps[-1].fs == -1


def test_cp_real_irreducibles():
    # [PAPER] C_p: 1 and alpha_1..alpha_{(p-1)/2}
    ring = real_ring(make_cyclic(7))
    assert [R.dim for R in ring.irreps] == [1, 2, 2, 2]
    ring2 = real_ring(make_cyclic(2))
    assert [R.dim for R in ring2.irreps] == [1, 1]


coeff = st.integers(-2, 2)


@given(st.sampled_from([1, 2, 3]), st.data())
def test_frobenius_reciprocity(which, data):
    G, gens = {1: (make_g24(), ["w"]), 2: (make_g12(), ["s"]), 3: (make_quaternion(), ["i"])}[which]
    sub = G.subgroup(gens=[G.generators[g] if g in G.generators else G.names.index(g)
                           for g in gens])
    tG, tH = character_table(G), character_table(sub.group)
    a = data.draw(st.lists(coeff, min_size=len(tH.irreducibles), max_size=len(tH.irreducibles)))
    b = data.draw(st.lists(coeff, min_size=len(tG.irreducibles), max_size=len(tG.irreducibles)))
    chi = sum((x * c for x, c in zip(tH.irreducibles, a)), tH.trivial() * 0)
    psi = sum((x * c for x, c in zip(tG.irreducibles, b)), tG.trivial() * 0)
    assert induce(chi, sub).inner(psi) == chi.inner(restrict(psi, sub))


def test_induce_from_whole_group_and_trivial():
    G = make_g12()
    whole = G.subgroup(range(G.order))
    t = character_table(G)
    assert t.decompose(t.trivial()) == [1] + [0] * (len(t.irreducibles) - 1)
    assert induce(character_table(whole.group).trivial(), whole).degree == 1
    triv = G.subgroup([G.identity])
    assert induce(character_table(triv.group).trivial(), triv) == t.regular()


def test_from_function_checks_classes():
    t = character_table(make_quaternion())
    with pytest.raises(NotAClassFunction):
        t.from_function(lambda g: g)


@given(st.data())
def test_det_multiplicative(data):
    ring = real_ring(make_g24())
    n = len(ring.irreps)
    a = sum((c * ring.basis(k) for k, c in enumerate(
        data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))), ring.zero())
    b = sum((c * ring.basis(k) for k, c in enumerate(
        data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))), ring.zero())
    da, db, dab = det_character(a), det_character(b), det_character(a + b)
    assert dab == tuple(x * y for x, y in zip(da, db))


def test_complexifiable_has_trivial_det():
    G = make_g12()
    ring = real_ring(G)
    for R in ring.irreps:
        if R.kind != "real":
            assert all(s == 1 for s in det_character(ring.basis(R.index)))


# -- conjugation representations ------------------------------------------------------------

def test_hurwitz_reps():
    # [PAPER] rho_Q8 = H_ad + H; H_ad|Q8 = 1 + chi_i + chi_j + chi_k
    U = finite_units(order_lipschitz())
    ring = real_ring(U.group)
    Had = order_conjugation_rep(U)
    H = order_left_rep(U)
    assert Had.real_class + H.real_class == ring.regular()
    assert Had.real_class.coeffs == (1, 1, 1, 1, 0)
    # [DERIVED] H_ad restricted to C4 = <i>: trace 4 at 1, 0 at +-i, 4 at -1
    i = U.named({"i": 1})
    C4 = U.group.subgroup(gens=[i])
    res = restrict_real(Had.real_class, C4)
    rC = real_ring(C4.group)
    sign = next(R for R in rC.irreps if R.dim == 1 and R.index != 0)
    assert res == 2 * rC.trivial() + 2 * rC.basis(sign.index)


def test_p3_conjugation_on_C4():
    # [PAPER] R (x) E restricted to C4 is 1_C + sigma_C, i.e. 2 trivial + 2 sign
    U = finite_units(order_p3())
    V = order_conjugation_rep(U).real_class
    G = U.group
    g4 = min(g for g in range(G.order) if G.element_orders[g] == 4)
    C4 = G.subgroup(gens=[g4])
    rC = real_ring(C4.group)
    res = restrict_real(V, C4, rC)
    sign = next(R for R in rC.irreps if R.dim == 1 and R.index != 0)
    assert res == 2 * rC.trivial() + 2 * rC.basis(sign.index)
    assert all(s == 1 for s in det_character(V))


def test_matrix_checks():
    G = make_cyclic(4)
    with pytest.raises(NotStable):
        extend_to_group(G, {"g": [[1, 1], [0, 1]]})
    chi = character_from_matrices(G, extend_to_group(G, {"g": [[0, -1], [1, 0]]}))
    assert [chi(g).to_int() for g in range(4)] == [2, 0, -2, 0]


@pytest.mark.parametrize("p,e", [(3, 2), (5, 3)])
def test_honda_conjugation_rep(p, e):
    n = p - 1
    rep = honda_conjugation_rep(p, e)
    assert rep.dim == n * n
    G = rep.group
    # [PAPER] res_{C_p} V = 1 + (n - 1) rho_{C_p}
    Cp = G.subgroup([a * n * n for a in range(p)])
    rH = real_ring(Cp.group)
    assert restrict_real(rep.real_class, Cp, rH) == rH.trivial() + (n - 1) * rH.regular()
    assert rep.real_class.is_genuine()


@pytest.mark.parametrize("p,e", [(3, 2), (5, 3), (7, 3)])
def test_regular_decomposition(p, e):
    # [PAPER] rho_G = 1 + sigma + sum lambda_m + sum Lambda_m, one copy of each generator
    n = p - 1
    D = regular_decomposition(make_honda_group(p, e), p, n * n)
    assert D.ok
    assert D.count == 2 + (n * n - 2) // 2 + n // 2
    # [DERIVED] Lambda_m = Ind alpha_m has dim 2n^2 and is not irreducible;
    # all m lie in one (Z/p)^x orbit so the Lambda_m coincide once p > 3
    assert all(W.dim == 2 * n * n for nm, W in zip(D.names, D.classes) if nm.startswith("Lambda"))
    assert not any(D.lambda_irreducible)
    assert D.Lambda_distinct == (p == 3)
