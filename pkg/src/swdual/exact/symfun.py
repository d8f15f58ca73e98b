"""Multivariate polynomials and symmetric-function manipulations.

Polynomials are sparse maps from exponent tuples to coefficients.  The
coefficient ring is Q (``Fraction``) or F_p (ints reduced mod p).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations


class NotSymmetric(ValueError):
    pass


class MPoly:
    """Sparse polynomial in ``nvars`` variables over Q or F_p."""

    __slots__ = ("nvars", "p", "terms")

    def __init__(self, nvars: int, terms=None, p: int | None = None):
        self.nvars = nvars
        self.p = p
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity")
            c = c % p if p else Fraction(c)
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), 0) + c
        if p:
            clean = {m: c % p for m, c in clean.items() if c % p}
        self.terms = clean

    @classmethod
    def const(cls, nvars, c, p=None):
        return cls(nvars, {(0,) * nvars: c}, p)

    @classmethod
    def var(cls, nvars, i, p=None):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, p)

    def _like(self, terms):
        return MPoly(self.nvars, terms, self.p)

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other, self.p)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return self._like({m: c for m, c in t.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MPoly) else -other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self._like({m: c * other for m, c in self.terms.items()})
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return self._like(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = MPoly.const(self.nvars, 1, self.p)
        for _ in range(k):
            r = r * self
        return r

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other, self.p)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.p, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def leading(self):
        """Lexicographically largest monomial (x1 > x2 > ...) with its coefficient."""
        m = max(self.terms)
        return m, self.terms[m]

    def permute(self, perm) -> "MPoly":
        return self._like({tuple(m[perm[i]] for i in range(self.nvars)): c
                           for m, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        # adjacent transpositions generate S_m
        for i in range(self.nvars - 1):
            perm = list(range(self.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def substitute(self, values):
        """Evaluate with the i-th variable replaced by ``values[i]`` (MPolys or scalars)."""
        out = None
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = term * (v ** e)
            out = term if out is None else out + term
        if out is None:
            return 0
        return out

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(f"x{i+1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def elementary(m: int, k: int, p: int | None = None) -> MPoly:
    """e_k(t_1..t_m) as an expanded polynomial."""
    terms = {}
    for S in combinations(range(m), k):
        terms[tuple(int(i in S) for i in range(m))] = 1
    return MPoly(m, terms, p)


def power_sum(m: int, k: int, p: int | None = None) -> MPoly:
    terms = {}
    for i in range(m):
        e = [0] * m
        e[i] = k
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return MPoly(m, terms, p)


def monomial_symmetric(exps, p: int | None = None) -> MPoly:
    """Sum over distinct permutations of the exponent vector."""
    return MPoly(len(exps), {perm: 1 for perm in set(permutations(exps))}, p)


def sym_to_elementary(f: MPoly) -> MPoly:
    """Write symmetric ``f`` as a polynomial in e_1..e_m.

    Leading-monomial elimination in lex order.  The result is an MPoly whose
    i-th variable stands for e_{i+1}.
    """
    if not f.is_symmetric():
        raise NotSymmetric("polynomial is not symmetric")
    m = f.nvars
    es = [elementary(m, k, f.p) for k in range(1, m + 1)]
    result = {}
    g = f
    while not g.is_zero():
        lead, c = g.leading()
        # lead is a partition: lead[0] >= lead[1] >= ...
        expo = tuple(lead[i] - (lead[i + 1] if i + 1 < m else 0) for i in range(m))
        if any(x < 0 for x in expo):
            raise NotSymmetric("leading monomial is not a partition")
        term = MPoly.const(m, c, f.p)
        for i, a in enumerate(expo):
            if a:
                term = term * es[i] ** a
        g = g - term
        result[expo] = result.get(expo, 0) + c
    return MPoly(m, result, f.p)


def expand_in_t(g: MPoly, m: int | None = None) -> MPoly:
    """Substitute e_i := e_i(t_1..t_m) into a polynomial in e_1..e_m."""
    m = g.nvars if m is None else m
    es = [elementary(m, k, g.p) for k in range(1, g.nvars + 1)]
    out = g.substitute(es)
    return out if isinstance(out, MPoly) else MPoly.const(m, out, g.p)


@lru_cache(maxsize=None)
def _newton_terms(k: int) -> tuple:
    s: list[dict] = [None]  # s[j] as dict over exponent tuples of length k
    for j in range(1, k + 1):
        t: dict = {}
        for i in range(1, j):
            sign = (-1) ** (i - 1)
            for mono, c in s[j - i].items():
                e = list(mono)
                e[i - 1] += 1
                e = tuple(e)
                t[e] = t.get(e, 0) + sign * c
        e = [0] * k
        e[j - 1] = 1
        t[tuple(e)] = t.get(tuple(e), 0) + (-1) ** (j - 1) * j
        s.append({m: c for m, c in t.items() if c})
    return tuple(sorted(s[k].items()))


def newton_s_k(k: int, p: int | None = None) -> MPoly:
    """Power sum s_k as an integer polynomial in c_1..c_k (variables 0..k-1).

    s_k - c1 s_{k-1} + ... + (-1)^{k-1} c_{k-1} s_1 + (-1)^k k c_k = 0.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return MPoly(k, dict(_newton_terms(k)), p)


def newton_eval(k: int, c: list[int], p: int | None = None):
    """Evaluate s_k at the given values of c_1..c_k (missing values are 0)."""
    vals = list(c[:k]) + [0] * max(0, k - len(c))
    total = 0
    for mono, coef in _newton_terms(k):
        term = coef
        for v, e in zip(vals, mono):
            if e:
                term *= v ** e
        total += term
    return total % p if p else total
