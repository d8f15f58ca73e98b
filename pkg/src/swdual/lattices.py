"""Full-rank integer lattices: p-saturation, stability under integer actions, index.

A lattice is spanned by the rows of a nonsingular integer matrix.  Actions are
integer matrices acting on column vectors, x -> A x.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exact.intmat import (det, hermite_normal_form, matvec, rational_inverse,
                           smith_normal_form, transpose)


class SingularBasis(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotContained(ValueError):
    pass


def _vp(x: int, p: int) -> int:
    v = 0
    while x and x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class Lattice:
    basis: tuple[tuple[int, ...], ...]

    def __init__(self, basis):
        rows = tuple(tuple(int(x) for x in r) for r in basis)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("basis must be square")
        if det([list(r) for r in rows]) == 0:
            raise SingularBasis("basis is singular")
        object.__setattr__(self, "basis", rows)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def hnf(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r) for r in hermite_normal_form([list(r) for r in self.basis]))

    @property
    def det(self) -> int:
        return abs(det([list(r) for r in self.basis]))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.hnf == other.hnf

    def __hash__(self):
        return hash(self.hnf)

    def coordinates(self, x) -> list[Fraction]:
        """Rational c with x = sum c_i basis_i."""
        inv = rational_inverse([list(r) for r in self.basis])
        return [sum(Fraction(x[k]) * inv[k][i] for k in range(self.rank)) for i in range(self.rank)]

    def contains(self, x) -> bool:
        if len(x) != self.rank:
            raise DimensionMismatch("vector has wrong length")
        return all(c.denominator == 1 for c in self.coordinates(x))

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(r) for r in other.basis)


def standard_lattice(d: int) -> Lattice:
    return Lattice([[int(i == j) for j in range(d)] for i in range(d)])


def saturate_at_p(L0: Lattice, p: int) -> Lattice:
    """{x in Z^d : p^k x in L0 for some k}, via the Smith form of the basis."""
    B = [list(r) for r in L0.basis]
    U, D, V = smith_normal_form(B)
    # U B V = D  =>  L0 = rowspan(D V^{-1}); rows of V^{-1} form a basis of Z^d
    Vinv = rational_inverse(V)
    W = [[int(x) for x in row] for row in Vinv]
    rows = []
    for i, w in enumerate(W):
        d = D[i][i]
        rows.append([(d // p ** _vp(d, p)) * x for x in w])
    return Lattice(hermite_normal_form(rows))


def is_p_saturated(L: Lattice, p: int) -> bool:
    return saturate_at_p(L, p) == L


def check_stability(L: Lattice, actions) -> bool:
    """True iff every A maps each basis vector of L back into L."""
    for A in actions:
        if len(A) != L.rank or any(len(r) != L.rank for r in A):
            raise DimensionMismatch("action matrix has the wrong size")
        for b in L.basis:
            if not L.contains(matvec(A, b)):
                return False
    return True


def lattice_index(L0: Lattice, L: Lattice) -> int:
    """[L : L0] for L0 contained in L."""
    if L0.rank != L.rank:
        raise DimensionMismatch("ranks differ")
    if not L.contains_lattice(L0):
        raise NotContained("L0 is not contained in L")
    return L0.det // L.det


def image_lattice(A, L: Lattice) -> Lattice:
    """A(L) for nonsingular integer A acting on columns."""
    return Lattice([matvec(A, b) for b in L.basis])


def mod_p_rank(L: Lattice, p: int) -> int:
    """Rank over F_p of the basis matrix; equals d iff L/pL has the expected size
    relative to the ambient lattice, i.e. iff p does not divide [Z^d : L]."""
    _, D, _ = smith_normal_form([list(r) for r in L.basis])
    return sum(1 for i in range(L.rank) if D[i][i] % p)


def lattice_from_columns(M) -> Lattice:
    return Lattice(transpose(M))
