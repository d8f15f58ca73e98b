"""The maximal order O_n = W<S>/(S^n - p) of the height-n division algebra, mod p^N.

W = W(F_{p^n}) is modelled as Z/p^N[y]/(g) where g is the minimal polynomial of
the Teichmueller lift omega of a primitive element of F_{p^n}; Frobenius acts by
y -> y^p.  An element of O_n is a list of n W-elements a_k meaning sum a_k S^k.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import comb, factorial


class PrecisionTooLow(ValueError):
    pass


class HenselNonconvergent(RuntimeError):
    pass


class OrderMismatch(RuntimeError):
    pass


class TooLarge(ValueError):
    pass


class OutOfAbelianRange(ValueError):
    pass


class SeriesDivergence(ArithmeticError):
    pass


# -- F_p polynomials (low degree first) ---------------------------------------------

def _pmod(a, f, m):
    """a mod monic f, coefficients mod m."""
    a = [x % m for x in a]
    n = len(f) - 1
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i]
        if c:
            for j in range(n + 1):
                a[i - n + j] = (a[i - n + j] - c * f[j]) % m
    a = a[:n]
    return a + [0] * (n - len(a))


def _pmul(a, b, f, m):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, m)


def _ppow(a, k, f, m):
    r = [1] + [0] * (len(f) - 2)
    while k:
        if k & 1:
            r = _pmul(r, a, f, m)
        a = _pmul(a, a, f, m)
        k >>= 1
    return r


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_polynomial(p: int, n: int) -> list[int]:
    """Lexicographically first monic f of degree n over F_p with x primitive mod f."""
    order = p**n - 1
    qs = _prime_factors(order)
    x = [0, 1] + [0] * max(0, n - 2) if n > 1 else None
    for tail in product(range(p), repeat=n):
        f = list(reversed(tail)) + [1]
        if f[0] == 0:
            continue
        if n == 1:
            # x = -f[0] must be a primitive root mod p
            g = (-f[0]) % p
            if all(pow(g, order // q, p) != 1 for q in qs) and pow(g, order, p) == 1:
                return f
            continue
        if _ppow(x, order, f, p) != [1] + [0] * (n - 1):
            continue
        if all(_ppow(x, order // q, f, p) != [1] + [0] * (n - 1) for q in qs):
            return f
    raise ValueError("no primitive polynomial found")


# -- the ring ----------------------------------------------------------------------------

@dataclass
class TruncatedOn:
    p: int
    n: int
    N: int
    g: list[int]          # monic minimal polynomial of omega over Z/p^N
    fbar: list[int]       # its reduction, a primitive polynomial over F_p

    @property
    def mod(self) -> int:
        return self.p ** self.N

    # W arithmetic: tuples of length n
    def wzero(self):
        return (0,) * self.n

    def wscalar(self, a: int):
        return ((a % self.mod),) + (0,) * (self.n - 1)

    def wadd(self, a, b):
        m = self.mod
        return tuple((x + y) % m for x, y in zip(a, b))

    def wneg(self, a):
        m = self.mod
        return tuple((-x) % m for x in a)

    def wmul(self, a, b):
        return tuple(_pmul(list(a), list(b), self.g, self.mod))

    def wpow(self, a, k):
        return tuple(_ppow(list(a), k, self.g, self.mod))

    @cached_property
    def omega(self):
        if self.n == 1:
            return self.wscalar(-self.g[0])
        return tuple([0, 1] + [0] * (self.n - 2))

    @cached_property
    def frob_matrix(self) -> list[list[int]]:
        """Column k holds sigma(y^k) = y^{pk} in the power basis."""
        cols = [self.wpow(self.omega, self.p * k) if k else self.wscalar(1) for k in range(self.n)]
        return [[cols[k][r] for k in range(self.n)] for r in range(self.n)]

    def sigma(self, a, times: int = 1):
        F = self.frob_matrix
        m = self.mod
        for _ in range(times % self.n if self.n else 0):
            a = tuple(sum(F[r][k] * a[k] for k in range(self.n)) % m for r in range(self.n))
        return a

    # O_n arithmetic: tuples of n W-elements
    def zero(self):
        return (self.wzero(),) * self.n

    def scalar(self, a: int):
        return (self.wscalar(a),) + (self.wzero(),) * (self.n - 1)

    def from_w(self, w):
        return (tuple(w),) + (self.wzero(),) * (self.n - 1)

    def one(self):
        return self.scalar(1)

    @cached_property
    def S(self):
        if self.n == 1:
            return self.scalar(self.p)
        return (self.wzero(), self.wscalar(1)) + (self.wzero(),) * (self.n - 2)

    def add(self, x, y):
        return tuple(self.wadd(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(self.wadd(a, self.wneg(b)) for a, b in zip(x, y))

    def smul(self, c: int, x):
        m = self.mod
        return tuple(tuple((c * t) % m for t in a) for a in x)

    def mul(self, x, y):
        n, p = self.n, self.p
        out = [self.wzero()] * n
        for k, a in enumerate(x):
            if not any(a):
                continue
            for l, b in enumerate(y):
                if not any(b):
                    continue
                prod = self.wmul(a, self.sigma(b, k))
                t = k + l
                if t >= n:
                    t -= n
                    prod = tuple((p * c) % self.mod for c in prod)
                out[t] = self.wadd(out[t], prod)
        return tuple(out)

    def pow(self, x, k: int):
        r = self.one()
        while k:
            if k & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            k >>= 1
        return r

    @property
    def unit_group_order(self) -> int:
        p, n, N = self.p, self.n, self.N
        return (p**n - 1) * p ** (n * (n * N - 1))

    def is_unit(self, x) -> bool:
        return any(c % self.p for c in x[0])

    def inverse(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError("element is not a unit")
        return self.pow(x, self.unit_group_order - 1)

    def reduce(self, x, k: int):
        """Coefficients reduced mod p^k (as a canonical key for O_n / p^k)."""
        m = self.p**k
        return tuple(tuple(c % m for c in a) for a in x)

    def random_element(self, rng: random.Random):
        return tuple(tuple(rng.randrange(self.mod) for _ in range(self.n)) for _ in range(self.n))

    def from_coords(self, v):
        """From n^2 integers, ordered (S-degree, omega-power)."""
        n = self.n
        return tuple(tuple(v[k * n + r] % self.mod for r in range(n)) for k in range(n))

    @property
    def size(self) -> int:
        return self.p ** (self.N * self.n * self.n)


def make_truncated_On(p: int, n: int, N: int = 6) -> TruncatedOn:
    if N < 2 or (p == 2 and N < 3):
        raise PrecisionTooLow(f"precision N={N} too low for p={p}")
    if n < 1:
        raise ValueError("n must be positive")
    fbar = primitive_polynomial(p, n)
    m = p**N
    if n == 1:
        # Teichmueller lift of the primitive root -fbar[0]
        w = (-fbar[0]) % m
        for _ in range(N + 1):
            w = pow(w, p, m)
        return TruncatedOn(p, n, N, [(-w) % m, 1], fbar)
    # Teichmueller lift of x in Z/p^N[x]/(fbar): iterate x -> x^{p^n}
    x = [0, 1] + [0] * (n - 2)
    w = x
    for _ in range(N + 1):
        w = _ppow(w, p**n, fbar, m)
    conj = [w]
    for _ in range(n - 1):
        conj.append(_ppow(conj[-1], p, fbar, m))
    # g(Y) = prod (Y - omega^{p^k}) with coefficients in Z/p^N[x]/(fbar)
    g = [[1] + [0] * (n - 1)]  # polynomial in Y with R0 coefficients, low first
    for r in conj:
        new = [[0] * n for _ in range(len(g) + 1)]
        for i, c in enumerate(g):
            new[i + 1] = [(a + b) % m for a, b in zip(new[i + 1], c)]
            prod = _pmul(c, r, fbar, m)
            new[i] = [(a - b) % m for a, b in zip(new[i], prod)]
        g = new
    if any(any(c[1:]) for c in g):
        raise OrderMismatch("minimal polynomial of omega is not over Z/p^N")
    gint = [c[0] for c in g]
    R = TruncatedOn(p, n, N, gint, fbar)
    _audit_ring(R)
    return R


def _audit_ring(R: TruncatedOn, samples: int = 20, seed: int = 0):
    om = R.omega
    if R.wpow(om, R.p**R.n - 1) != R.wscalar(1):
        raise OrderMismatch("omega^(p^n - 1) != 1")
    for q in _prime_factors(R.p**R.n - 1):
        if R.wpow(om, (R.p**R.n - 1) // q) == R.wscalar(1):
            raise OrderMismatch("omega is not a generator")
    rng = random.Random(seed)
    Sn = R.pow(R.S, R.n)
    if Sn != R.scalar(R.p):
        raise OrderMismatch("S^n != p")
    for _ in range(samples):
        x, y, z = (R.random_element(rng) for _ in range(3))
        if R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z)):
            raise OrderMismatch("multiplication is not associative")


def associativity_audit(R: TruncatedOn, samples: int = 1000, seed: int = 1) -> bool:
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (R.random_element(rng) for _ in range(3))
        if R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z)):
            return False
    return True


# -- the commutative subring Z/p^N[X]/(X^n + p) -------------------------------------------

class _XRing:
    """Z/p^N[X]/(X^n + p)."""

    def __init__(self, p, n, N):
        self.p, self.n, self.m = p, n, p**N
        self.f = [p] + [0] * (n - 1) + [1]

    def mul(self, a, b):
        return _pmul(a, b, self.f, self.m)

    def add(self, a, b):
        return [(x + y) % self.m for x, y in zip(a, b)]

    def sub(self, a, b):
        return [(x - y) % self.m for x, y in zip(a, b)]

    def const(self, c):
        return [c % self.m] + [0] * (self.n - 1)

    def X(self):
        return [0, 1] + [0] * (self.n - 2) if self.n > 1 else [(-self.p) % self.m]

    def inverse(self, a):
        if a[0] % self.p == 0:
            raise ZeroDivisionError("not a unit")
        w = self.const(pow(a[0], -1, self.m))
        two = self.const(2)
        for _ in range(2 * self.n * 64):
            w2 = self.mul(w, self.sub(two, self.mul(a, w)))
            if w2 == w:
                return w
            w = w2
        raise HenselNonconvergent("inverse iteration did not stabilize")


@dataclass(frozen=True)
class ZetaTau:
    zeta: tuple
    tau: tuple
    e: int
    u: tuple            # zeta = 1 + X u in Z/p^N[X]/(X^n + p)
    X: tuple
    iterations: int     # Newton steps until stabilization
    precision: int


def hensel_zeta_tau(R: TruncatedOn) -> ZetaTau:
    p, n = R.p, R.n
    if n != p - 1:
        raise ValueError("hensel_zeta_tau needs n = p - 1")
    if n % 2:
        raise ValueError("n must be even")
    A = _XRing(p, n, R.N)
    X = A.X()

    def F(u):
        # u^n - sum_{k=1}^{p-1} (C(p,k)/p) X^{k-1} u^{k-1}
        upow = [A.const(1)]
        for _ in range(p - 1):
            upow.append(A.mul(upow[-1], u))
        Xpow = [A.const(1)]
        for _ in range(p - 1):
            Xpow.append(A.mul(Xpow[-1], X))
        out = upow[n]
        for k in range(1, p):
            term = A.mul(Xpow[k - 1], upow[k - 1])
            out = A.sub(out, [(comb(p, k) // p) * t for t in term])
        return out, upow, Xpow

    def dF(u, upow, Xpow):
        out = [(n * t) for t in upow[n - 1]]
        for k in range(2, p):
            term = A.mul(Xpow[k - 1], upow[k - 2])
            out = A.sub(out, [(comb(p, k) // p) * (k - 1) * t for t in term])
        return [t % A.m for t in out]

    u = A.const(1)  # 1 is a (p-1)-st root of unity mod X
    it = 0
    for it in range(1, 4 * n * R.N + 8):
        val, upow, Xpow = F(u)
        if not any(val):
            break
        u = A.sub(u, A.mul(val, A.inverse(dF(u, upow, Xpow))))
    else:
        raise HenselNonconvergent("Newton iteration for zeta_p did not converge")
    if any(F(u)[0]):
        raise HenselNonconvergent("zeta_p equation unsolved")
    # embed into O_n: X -> omega^{n/2} S
    Xo = R.mul(R.from_w(R.wpow(R.omega, n // 2)), R.S)
    Xpows = [R.one()]
    for _ in range(n):
        Xpows.append(R.mul(Xpows[-1], Xo))
    if Xpows[n] != R.scalar(-p):
        raise OrderMismatch("X^n != -p")
    zeta = R.one()
    for k, c in enumerate(u):
        zeta = R.add(zeta, R.smul(c, Xpows[k + 1]))
    if R.pow(zeta, p) != R.one() or zeta == R.one():
        raise OrderMismatch("zeta does not have exact order p")
    tau = R.from_w(R.wpow(R.omega, (p**n - 1) // (n * n)))
    tinv = R.pow(tau, n * n - 1)
    conj = R.mul(R.mul(tau, zeta), tinv)
    zp = R.one()
    e = None
    for k in range(1, p):
        zp = R.mul(zp, zeta)
        if zp == conj:
            e = k
            break
    if e is None:
        raise OrderMismatch("tau zeta tau^{-1} is not a power of zeta")
    return ZetaTau(zeta, tau, e, tuple(u), Xo, it, R.N)


def element_order(R: TruncatedOn, x, bound: int) -> int:
    y = x
    for k in range(1, bound + 1):
        if y == R.one():
            return k
        y = R.mul(y, x)
    raise OrderMismatch("order exceeds bound")


def is_primitive_root(e: int, p: int) -> bool:
    return all(pow(e, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))


# -- lower p-series ------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientInvariants:
    p: int
    i: int
    j: int
    order: int
    invariants: tuple[int, ...]   # cyclic factor orders, ascending


def lower_p_series_data(R: TruncatedOn, i: int, j: int, cap: int = 10**6) -> QuotientInvariants:
    """Invariants of Gamma_i / Gamma_j with Gamma_i = 1 + p^i O_n."""
    p, n = R.p, R.n
    if j < i:
        raise OutOfAbelianRange("need i <= j")
    if i == j:
        return QuotientInvariants(p, i, j, 1, ())
    if i < 1 or j > 2 * i or (p == 2 and i < 2):
        raise OutOfAbelianRange(f"(i, j) = ({i}, {j}) outside the abelian range")
    if j > R.N:
        raise PrecisionTooLow("j exceeds the working precision")
    size = p ** (n * n * (j - i))
    if size > cap:
        raise TooLarge(f"quotient has {size} elements (cap {cap})")
    one = R.one()
    pi = p**i
    keyone = R.reduce(one, j)
    elems = []
    for v in product(range(p ** (j - i)), repeat=n * n):
        elems.append(R.add(one, R.smul(pi, R.from_coords(v))))
    # count solutions of g^{p^k} = 1 for k = 1, 2, ...
    counts = [1]
    powers = elems
    k = 0
    while counts[-1] < size:
        k += 1
        powers = [R.pow(g, p) for g in powers]
        counts.append(sum(1 for g in powers if R.reduce(g, j) == keyone))
    # number of cyclic factors of order >= p^k is log_p(counts[k] / counts[k-1])
    ge = []
    for k in range(1, len(counts)):
        ratio = counts[k] // counts[k - 1]
        e = 0
        while ratio > 1:
            ratio //= p
            e += 1
        ge.append(e)
    ge.append(0)
    inv = []
    for k in range(1, len(ge)):
        inv += [p**k] * (ge[k - 1] - ge[k])
    return QuotientInvariants(p, i, j, size, tuple(sorted(inv)))


def log_linear_check(R: TruncatedOn, i: int, j: int, samples: int = 200, seed: int = 0) -> bool:
    """x -> 1 + x is additive-to-multiplicative on p^i O_n modulo p^{i+j} (j <= i)."""
    rng = random.Random(seed)
    pi = R.p**i
    for _ in range(samples):
        x = R.smul(pi, R.random_element(rng))
        y = R.smul(pi, R.random_element(rng))
        lhs = R.mul(R.add(R.one(), x), R.add(R.one(), y))
        rhs = R.add(R.one(), R.add(x, y))
        if R.reduce(lhs, i + j) != R.reduce(rhs, i + j):
            return False
    return True


# -- exponential ----------------------------------------------------------------------------

def _vp(m: int, p: int) -> int:
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


@dataclass(frozen=True)
class ExpReport:
    p: int
    i: int
    samples: int
    passed: int
    terms: int

    @property
    def ok(self) -> bool:
        return self.passed == self.samples


def exp_series(R: TruncatedOn, y, i: int, target: int):
    """exp(p^i y) modulo p^target, summing until all further terms vanish."""
    p = R.p
    if i * (p - 1) <= 1:
        raise SeriesDivergence(f"exp does not converge on p^{i} O_n at p={p}")
    total = R.one()
    ypow = R.one()
    k = 0
    while True:
        k += 1
        ypow = R.mul(ypow, y)
        fk = factorial(k)
        v = _vp(fk, p)
        ex = i * k - v
        if ex >= target:
            # exponents i*k - v_p(k!) increase from here on: since
            # v_p(k!) < k/(p-1) <= ... the bound ex >= target persists.
            if all(i * kk - _vp(factorial(kk), p) >= target for kk in range(k, k + p + 1)):
                return total, k
            continue
        unit = fk // p**v
        c = p**ex * pow(unit, -1, R.mod) % R.mod
        total = R.add(total, R.smul(c, ypow))


def exp_identity_check(R: TruncatedOn, i: int, samples: int = 100, seed: int = 0,
                       ys=None) -> ExpReport:
    p = R.p
    if i < 1 or 2 * i > R.N:
        raise PrecisionTooLow("need 1 <= i and 2i <= N")
    if i * (p - 1) <= 1:
        raise SeriesDivergence(f"exp does not converge on p^{i} O_n at p={p}")
    rng = random.Random(seed)
    ys = list(ys) if ys is not None else [R.random_element(rng) for _ in range(samples)]
    passed = 0
    terms = 0
    for y in ys:
        # sum at full working precision, compare modulo p^{2i}
        e, terms = exp_series(R, y, i, R.N)
        if R.reduce(e, 2 * i) == R.reduce(R.add(R.one(), R.smul(p**i, y)), 2 * i):
            passed += 1
    return ExpReport(p, i, len(ys), passed, terms)
