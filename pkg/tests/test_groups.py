"""Group core against sympy permutation groups (regular representation)."""
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from swdual.groups import (GroupAxiomError, NotAutomorphism, NotHomomorphism, NotSubgroup,
                           FiniteGroup, center, conjugacy_classes, direct_product,
                           find_isomorphism, make_cyclic, make_g12, make_g24, make_metacyclic,
                           make_quaternion, make_semidirect)


def as_perm_group(G):
    return PermutationGroup([Permutation([G.mul[x][g] for x in range(G.order)])
                             for g in G.generators.values()])


GROUPS = {
    "C9": make_cyclic(9),
    "Q8": make_quaternion(),
    "G12": make_g12(),
    "G24": make_g24(),
    "C3xC3": direct_product(make_cyclic(3), make_cyclic(3)),
    "C5:C16": make_metacyclic(5, 16, 2),
}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_against_sympy(name):
    G = GROUPS[name]
    P = as_perm_group(G)
    assert P.order() == G.order
    assert len(P.conjugacy_classes()) == len(G.classes)
    assert sorted(len(c) for c in P.conjugacy_classes()) == sorted(C.size for C in G.classes)
    assert P.is_abelian == G.is_abelian
    assert len(P.center().elements) == len(center(G))


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_classes_partition_and_are_conjugation_orbits(name):
    G = GROUPS[name]
    seen = set()
    for C in conjugacy_classes(G):
        orbit = {G.conj(g, C.rep) for g in range(G.order)}
        assert orbit == set(C.elements)
        assert not seen & orbit
        seen |= orbit
    assert seen == set(range(G.order))


def test_named_structures():
    # [PAPER] G24 = Q8 x| C3, G12 = C3 x| C4, both non-abelian with centre of order 2
    assert find_isomorphism(make_g24(), make_g24()) is not None
    for G in (make_g12(), make_g24(), make_quaternion()):
        assert len(center(G)) == 2
    Q = make_quaternion()
    assert sorted(Q.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert find_isomorphism(make_g12(), make_metacyclic(3, 4, 2)) is not None
    assert find_isomorphism(make_g12(), make_cyclic(12)) is None


@given(st.integers(1, 40))
def test_cyclic(k):
    G = make_cyclic(k)
    assert G.order == k and G.is_abelian and len(G.classes) == k
    assert G.exponent == k


def test_semidirect_errors():
    N, H = make_cyclic(5), make_cyclic(4, "t")
    with pytest.raises(NotAutomorphism):
        make_semidirect(N, H, {"t": [0, 0, 0, 0, 0]})
    with pytest.raises(NotHomomorphism):
        make_metacyclic(5, 3, 2)


def test_table_audit():
    with pytest.raises(GroupAxiomError):
        FiniteGroup([[0, 1], [1, 1]], {"g": 1})


def test_subgroups():
    G = make_g24()
    q8 = G.subgroup([g for g in range(G.order) if G.element_orders[g] in (1, 2, 4)])
    assert q8.order == 8 and q8.index == 3
    assert find_isomorphism(make_quaternion(), q8.group) is not None
    with pytest.raises(NotSubgroup):
        G.subgroup([G.identity, G.generators["w"]])
