"""Exact cyclotomic numbers as elements of Z[x]/(x^N - 1).

A value is stored redundantly (the carrier ring is not a field); two values
are equal when they agree in Z[zeta_N], i.e. after reduction modulo the
N-th cyclotomic polynomial.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (coefficients low degree first), den monic."""
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [0]
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert not any(num), "division was not exact"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Phi_n, coefficients low degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _polydiv_exact(p, list(cyclotomic_poly(d)))
    return tuple(p)


def _reduce_mod(coeffs, modpoly) -> tuple[int, ...]:
    c = list(coeffs)
    dn = len(modpoly) - 1
    for i in range(len(c) - 1, dn - 1, -1):
        a = c[i]
        if a:
            for j in range(dn + 1):
                c[i - dn + j] -= a * modpoly[j]
    c = c[:dn] + [0] * max(0, dn - len(c))
    return tuple(c)


class Cyclo:
    """Element of Z[x]/(x^N - 1), read as a number via x -> exp(2 pi i / N)."""

    __slots__ = ("N", "c", "_red")

    def __init__(self, N: int, coeffs):
        if N < 1:
            raise ValueError("modulus must be positive")
        c = [0] * N
        for i, a in enumerate(coeffs):
            c[i % N] += int(a)
        self.N = N
        self.c = tuple(c)
        self._red = None

    # constructors
    @classmethod
    def integer(cls, N: int, a: int) -> "Cyclo":
        return cls(N, [a])

    @classmethod
    def root(cls, N: int, k: int) -> "Cyclo":
        c = [0] * N
        c[k % N] = 1
        return cls(N, c)

    # arithmetic
    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.N != self.N:
                raise ValueError(f"modulus mismatch {self.N} vs {other.N}")
            return other
        if isinstance(other, int):
            return Cyclo.integer(self.N, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.N, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.N, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.N, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo(self.N, [a * other for a in self.c])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        N = self.N
        xs = [(i, a) for i, a in enumerate(self.c) if a]
        ys = [(j, b) for j, b in enumerate(o.c) if b]
        out = [0] * N
        for i, a in xs:
            for j, b in ys:
                out[(i + j) % N] += a * b
        return Cyclo(N, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers unsupported")
        r = Cyclo.integer(self.N, 1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def conj(self) -> "Cyclo":
        N = self.N
        return Cyclo(N, [self.c[(-i) % N] for i in range(N)])

    def galois(self, k: int) -> "Cyclo":
        """Apply x -> x^k (an automorphism when gcd(k, N) = 1)."""
        N = self.N
        out = [0] * N
        for i, a in enumerate(self.c):
            out[(i * k) % N] += a
        return Cyclo(N, out)

    def exact_div(self, d: int) -> "Cyclo":
        """Divide by an integer; the reduced form must be divisible."""
        r = self.reduced()
        if any(a % d for a in r):
            raise ValueError(f"{self} is not divisible by {d}")
        return Cyclo(self.N, [a // d for a in r])

    def lift(self, M: int) -> "Cyclo":
        """Embed into Z[x]/(x^M - 1) for N | M."""
        if M % self.N:
            raise ValueError("N must divide M")
        s = M // self.N
        out = [0] * M
        for i, a in enumerate(self.c):
            out[i * s] += a
        return Cyclo(M, out)

    # comparison
    def reduced(self) -> tuple[int, ...]:
        if self._red is None:
            self._red = _reduce_mod(self.c, cyclotomic_poly(self.N))
        return self._red

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclo.integer(self.N, other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        if other.N != self.N:
            M = self.N * other.N // gcd(self.N, other.N)
            return self.lift(M).reduced() == other.lift(M).reduced()
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash((self.N, self.reduced()))

    def is_rational(self) -> bool:
        return not any(self.reduced()[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.reduced()[0] if self.reduced() else 0

    def is_real(self) -> bool:
        return self == self.conj()

    def mod_eval(self, q: int, zeta: int) -> int:
        """Image in F_q under x -> zeta, where zeta has order dividing N mod q."""
        return sum(a * pow(zeta, i, q) for i, a in enumerate(self.c)) % q

    def spectrum(self) -> tuple[int, ...]:
        """The raw coefficient vector; meaningful as eigenvalue multiplicities."""
        return self.c

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.reduced()):
            if a:
                terms.append(f"{a}" if i == 0 else f"{a}*z^{i}")
        return f"Cyclo[{self.N}](" + (" + ".join(terms) or "0") + ")"

