"""Orders in definite rational quaternion algebras.

An order is a Z-lattice with basis rows ``B`` (rational coordinates in the
standard basis 1, i, j, ij of the algebra (a, b)).  Elements of the order are
integer coordinate tuples in that basis.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import isqrt

from .exact.intmat import det, rational_inverse
from .groups import FiniteGroup, _small_generating_set


class NormNotDefinite(ValueError):
    pass


class NotUnit(ValueError):
    pass


class NonIntegralEntries(ValueError):
    pass


class NotAnOrder(ValueError):
    pass


@dataclass(frozen=True)
class QuaternionAlgebra:
    """(a, b)_Q: i^2 = a, j^2 = b, ij = -ji."""
    a: int
    b: int
    names: tuple[str, str, str, str] = ("1", "i", "j", "k")

    def mul(self, x, y):
        a, b = self.a, self.b
        x0, x1, x2, x3 = x
        y0, y1, y2, y3 = y
        return (x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
                x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
                x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
                x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1)

    def conj(self, x):
        return (x[0], -x[1], -x[2], -x[3])

    def nrd(self, x):
        a, b = self.a, self.b
        return x[0] ** 2 - a * x[1] ** 2 - b * x[2] ** 2 + a * b * x[3] ** 2

    def fmt(self, x) -> str:
        parts = []
        for c, nm in zip(x, self.names):
            if c == 0:
                continue
            c = Fraction(c)
            mag = "" if abs(c) == 1 and nm != "1" else str(abs(c))
            body = mag + ("" if nm == "1" else nm) if nm != "1" else str(abs(c))
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts) or "0"
        return s[1:] if s.startswith("+") else s


class StructOrder:
    """A Z-order given by basis rows in a quaternion algebra."""

    def __init__(self, algebra: QuaternionAlgebra, basis, names, label: str = ""):
        self.A = algebra
        self.B = [[Fraction(x) for x in row] for row in basis]
        self.d = len(self.B)
        self.names = list(names)
        self.label = label
        if det([[x.numerator * _lcm_den(self.B) // x.denominator for x in r] for r in self.B]) == 0:
            raise NotAnOrder("basis is singular")
        self.Binv = rational_inverse(self.B)
        self.struct = [[self.from_alg(self.A.mul(self.B[u], self.B[v]), strict=True)
                        for v in range(self.d)] for u in range(self.d)]
        self._audit()

    # coordinates
    def to_alg(self, x):
        return tuple(sum(Fraction(x[u]) * self.B[u][c] for u in range(self.d)) for c in range(4))

    def from_alg(self, y, strict: bool = True):
        v = [sum(Fraction(y[c]) * self.Binv[c][u] for c in range(4)) for u in range(self.d)]
        if strict:
            if any(t.denominator != 1 for t in v):
                raise NotAnOrder(f"{y} is not in the order {self.label}")
            return tuple(int(t) for t in v)
        return tuple(v)

    def one(self):
        return self.from_alg((1, 0, 0, 0))

    def mul(self, x, y):
        out = [0] * self.d
        for u, xu in enumerate(x):
            if xu:
                for v, yv in enumerate(y):
                    if yv:
                        s = self.struct[u][v]
                        for w in range(self.d):
                            out[w] += xu * yv * s[w]
        return tuple(out)

    def conj(self, x):
        return self.from_alg(self.A.conj(self.to_alg(x)))

    def nrd(self, x) -> int:
        n = self.A.nrd(self.to_alg(x))
        assert n.denominator == 1
        return int(n)

    @cached_property
    def norm_form(self) -> list[list[Fraction]]:
        """Gram matrix Q with nrd(x) = x Q x^T in order coordinates."""
        a, b = self.A.a, self.A.b
        D = [1, -a, -b, a * b]
        return [[sum(self.B[u][c] * D[c] * self.B[v][c] for c in range(4))
                 for v in range(self.d)] for u in range(self.d)]

    def is_definite(self) -> bool:
        Q = self.norm_form
        for k in range(1, self.d + 1):
            if _frac_det([row[:k] for row in Q[:k]]) <= 0:
                return False
        return True

    def _audit(self, samples: int = 50, seed: int = 0):
        one = self.one()
        basis = [tuple(int(u == v) for v in range(self.d)) for u in range(self.d)]
        for x in basis:
            if self.mul(one, x) != x or self.mul(x, one) != x:
                raise NotAnOrder("unit axiom fails")
        for x, y, z in product(basis, repeat=3):
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                raise NotAnOrder("associativity fails on basis")
        rng = random.Random(seed)
        for _ in range(samples):
            x = tuple(rng.randint(-3, 3) for _ in range(self.d))
            y = tuple(rng.randint(-3, 3) for _ in range(self.d))
            if self.nrd(self.mul(x, y)) != self.nrd(x) * self.nrd(y):
                raise NotAnOrder("norm is not multiplicative")

    def element(self, expr: dict[str, Fraction | int]):
        """Element from standard-basis coefficients keyed by algebra basis names."""
        y = [Fraction(0)] * 4
        for k, v in expr.items():
            y[self.A.names.index(k)] += Fraction(v)
        return self.from_alg(tuple(y))

    def fmt(self, x) -> str:
        return self.A.fmt(self.to_alg(x))

    def inverse(self, u):
        n = self.nrd(u)
        if abs(n) != 1:
            raise NotUnit(f"{self.fmt(u)} has reduced norm {n}")
        return tuple(n * c for c in self.conj(u))


def _lcm_den(B):
    from math import lcm
    return lcm(*(x.denominator for r in B for x in r))


def _frac_det(M) -> Fraction:
    n = len(M)
    A = [list(r) for r in M]
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return d


def norm_one_elements(O: StructOrder) -> list[tuple[int, ...]]:
    """All x with nrd(x) = 1, by a box search from the inverse Gram matrix."""
    if not O.is_definite():
        raise NormNotDefinite(f"norm form of {O.label} is not positive definite")
    Qi = rational_inverse(O.norm_form)
    # |x_u|^2 <= (Q^{-1})_{uu} * nrd(x) on the ellipsoid nrd = 1
    bounds = []
    for u in range(O.d):
        q = Qi[u][u]
        t = isqrt(q.numerator // q.denominator)
        while Fraction((t + 1) ** 2) <= q:
            t += 1
        bounds.append(t)
    out = []
    for x in product(*(range(-t, t + 1) for t in bounds)):
        if O.nrd(x) == 1:
            out.append(tuple(x))
    return sorted(out)


@dataclass
class UnitGroup:
    group: FiniteGroup
    elements: list[tuple[int, ...]]  # group index -> order coordinates
    order_ring: StructOrder = field(repr=False)

    def index(self, x) -> int:
        return self.elements.index(tuple(x))

    def named(self, expr) -> int:
        return self.index(self.order_ring.element(expr))


def finite_units(O: StructOrder) -> UnitGroup:
    units = norm_one_elements(O)
    one = O.one()
    units.remove(one)
    units = [one] + units
    pos = {u: t for t, u in enumerate(units)}
    table = []
    for x in units:
        row = []
        for y in units:
            z = O.mul(x, y)
            if z not in pos:
                raise NotAnOrder("norm-one elements not closed under multiplication")
            row.append(pos[z])
        table.append(row)
    for x in units:
        if O.inverse(x) not in pos:
            raise NotAnOrder("norm-one elements not closed under inverse")
    G0 = FiniteGroup(table, {"e": 0}, [O.fmt(u) for u in units], 0, audit=False)
    gens = _small_generating_set(G0, range(len(units)))
    G = FiniteGroup(table, {O.fmt(units[g]): g for g in gens}, G0.names, 0,
                    f"units({O.label})")
    return UnitGroup(G, units, O)


def conj_action_matrix(O: StructOrder, u, basis=None):
    """Matrix of x -> u x u^{-1}; column v holds the image of basis vector v.

    ``basis`` lists the rows of a sublattice in order coordinates (default:
    the order's own basis).
    """
    uinv = O.inverse(u)
    if basis is None:
        basis = [tuple(int(a == b) for b in range(O.d)) for a in range(O.d)]
    basis = [[Fraction(x) for x in row] for row in basis]
    binv = rational_inverse(basis)
    cols = []
    for row in basis:
        img = O.mul(O.mul(u, _as_frac_elem(row)), uinv)
        coords = [sum(Fraction(img[c]) * binv[c][v] for c in range(O.d)) for v in range(O.d)]
        if any(t.denominator != 1 for t in coords):
            raise NonIntegralEntries("conjugation does not preserve the lattice")
        cols.append([int(t) for t in coords])
    return [[cols[v][w] for v in range(O.d)] for w in range(O.d)]


def _as_frac_elem(row):
    return tuple(row)


# -- the orders of the two n = 2 cases -------------------------------------------------

def algebra_p3() -> QuaternionAlgebra:
    """i^2 = -1, phi^2 = -3, phi i = -i phi."""
    return QuaternionAlgebra(-1, -3, ("1", "i", "phi", "iphi"))


def algebra_hamilton() -> QuaternionAlgebra:
    return QuaternionAlgebra(-1, -1, ("1", "i", "j", "k"))


def order_p3() -> StructOrder:
    """E = Z{1, i, sigma, i sigma} with sigma = -(1 + phi)/2."""
    h = Fraction(1, 2)
    return StructOrder(algebra_p3(),
                       [[1, 0, 0, 0], [0, 1, 0, 0], [-h, 0, -h, 0], [0, -h, 0, -h]],
                       ["1", "i", "sigma", "isigma"], "E(p=3)")


def order_p3_E0() -> StructOrder:
    """E0 = Z{1, i, phi, i phi}."""
    return StructOrder(algebra_p3(), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                       ["1", "i", "phi", "iphi"], "E0(p=3)")


def order_hurwitz() -> StructOrder:
    """E = Z{1, i, j, (1+i+j+k)/2}."""
    h = Fraction(1, 2)
    return StructOrder(algebra_hamilton(),
                       [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [h, h, h, h]],
                       ["1", "i", "j", "(1+i+j+k)/2"], "E(p=2)")


def order_lipschitz() -> StructOrder:
    return StructOrder(algebra_hamilton(), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                       ["1", "i", "j", "k"], "Lipschitz")


def sublattice_rows(O: StructOrder, other: StructOrder):
    """Rows of ``other``'s basis written in ``O``'s coordinates (must be integral)."""
    return [list(O.from_alg(tuple(r))) for r in other.B]
