"""Mod-p group cohomology from the normalized bar complex, plus small ring models.

A k-cochain is a function on k-tuples of non-identity elements, stored sparsely
as ``{code: value}`` where ``code`` encodes the tuple in base |G|-1.  Cup
products use the Alexander-Whitney formula; restriction, transfer and
conjugation are cochain maps.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .exact.fp import Echelon, nullspace
from .groups import FiniteGroup, NotSubgroup, Subgroup

COCHAIN_CAP = 10**7


class TooLarge(ValueError):
    pass


class MixedGroups(ValueError):
    pass


class NotCocycle(ValueError):
    pass


class BadMultiplier(ValueError):
    pass


class BarComplex:
    """Normalized bar cochains C^k(G; F_p) with trivial coefficients."""

    def __init__(self, G: FiniteGroup, p: int, maxdeg: int = 4):
        if G.order ** maxdeg > COCHAIN_CAP:
            raise TooLarge(f"|G|^maxdeg = {G.order ** maxdeg} exceeds {COCHAIN_CAP}")
        self.G = G
        self.p = p
        self.maxdeg = maxdeg
        self.nz = [g for g in range(G.order) if g != G.identity]
        self.m = len(self.nz)
        self.pos = {g: i for i, g in enumerate(self.nz)}
        self._H: dict[int, "_Basis"] = {}
        self._rank: dict[int, int] = {}

    def __repr__(self):
        return f"BarComplex({self.G.label}, p={self.p})"

    # encoding
    def enc(self, t) -> int:
        v = 0
        for x in t:
            v = v * self.m + self.pos[x]
        return v

    def dec(self, code: int, k: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            code, r = divmod(code, self.m)
            out.append(self.nz[r])
        return tuple(reversed(out))

    def tuples(self, k: int):
        return product(self.nz, repeat=k)

    def _check(self, k):
        if k > self.maxdeg + 1:
            raise TooLarge(f"degree {k} beyond maxdeg {self.maxdeg}")

    # differential
    def d_row(self, t) -> dict[int, int]:
        """(df)(t) as a linear functional on C^k, for a (k+1)-tuple t."""
        p, mul, e = self.p, self.G.mul, self.G.identity
        k = len(t) - 1
        row: dict[int, int] = {}

        def add(c, v):
            w = (row.get(c, 0) + v) % p
            if w:
                row[c] = w
            else:
                row.pop(c, None)

        add(self.enc(t[1:]), 1)
        for i in range(k):
            pr = mul[t[i]][t[i + 1]]
            if pr != e:
                add(self.enc(t[:i] + (pr,) + t[i + 2:]), (-1) ** (i + 1))
        add(self.enc(t[:k]), (-1) ** (k + 1))
        return row

    def d_image(self, s) -> dict[int, int]:
        """d(delta_s) in C^{k+1} for a k-tuple s."""
        p, G = self.p, self.G
        k = len(s)
        out: dict[int, int] = {}

        def add(t, v):
            c = self.enc(t)
            w = (out.get(c, 0) + v) % p
            if w:
                out[c] = w
            else:
                out.pop(c, None)

        s = tuple(s)
        for a in self.nz:
            add((a,) + s, 1)
        for i in range(k):
            for a in self.nz:
                if a == s[i]:
                    continue
                b = G.mul[G.inv[a]][s[i]]
                add(s[:i] + (a, b) + s[i + 1:], (-1) ** (i + 1))
        for a in self.nz:
            add(s + (a,), (-1) ** (k + 1))
        return out

    def d(self, f: dict[int, int], k: int) -> dict[int, int]:
        out: dict[int, int] = {}
        p = self.p
        for code, v in f.items():
            for c, w in self.d_image(self.dec(code, k)).items():
                x = (out.get(c, 0) + v * w) % p
                if x:
                    out[c] = x
                else:
                    out.pop(c, None)
        return out

    def rank_d(self, k: int) -> int:
        """Rank of d: C^k -> C^{k+1}."""
        if k not in self._rank:
            if k == 0:
                self._rank[0] = 0
            else:
                self._check(k)
                E = Echelon(self.p)
                for s in self.tuples(k):
                    E.add(self.d_image(s))
                self._rank[k] = E.rank
        return self._rank[k]

    def dim(self, k: int) -> int:
        if k == 0:
            return 1
        return self.m**k - self.rank_d(k) - self.rank_d(k - 1)

    def dims(self, maxdeg: int | None = None) -> tuple[int, ...]:
        maxdeg = self.maxdeg if maxdeg is None else maxdeg
        return tuple(self.dim(k) for k in range(maxdeg + 1))

    # cohomology bases
    def basis(self, k: int) -> "_Basis":
        if k not in self._H:
            self._H[k] = _Basis.build(self, k)
        return self._H[k]

    def coords(self, f: dict[int, int], k: int) -> tuple[int, ...]:
        return self.basis(k).coords(f)

    def is_cocycle(self, f, k) -> bool:
        return not self.d(f, k)

    def cls(self, f: dict[int, int], k: int) -> "CohClass":
        return CohClass(self, k, self.coords(f, k))

    def gens(self, k: int) -> list["CohClass"]:
        h = self.basis(k).dim
        return [CohClass(self, k, tuple(int(i == j) for j in range(h))) for i in range(h)]

    def one(self) -> "CohClass":
        return CohClass(self, 0, (1,))

    def zero(self, k: int) -> "CohClass":
        return CohClass(self, k, (0,) * self.basis(k).dim)

    def hom_class(self, values: dict[str, int]) -> "CohClass":
        """Degree-one class of the homomorphism G -> F_p with given generator values."""
        G, p = self.G, self.p
        phi = {G.identity: 0}
        stack = [G.identity]
        gens = [(G.generators[nm], v % p) for nm, v in values.items()]
        if set(values) != set(G.generators):
            raise ValueError("need a value for every generator")
        while stack:
            x = stack.pop()
            for g, v in gens:
                y = G.mul[x][g]
                w = (phi[x] + v) % p
                if y in phi:
                    if phi[y] != w:
                        raise ValueError("values do not define a homomorphism")
                else:
                    phi[y] = w
                    stack.append(y)
        f = {self.enc((g,)): phi[g] for g in self.nz if phi[g]}
        return self.cls(f, 1)


@dataclass
class _Basis:
    """Cocycle representatives of H^k and a tracked echelon for coordinates."""
    cx: BarComplex
    k: int
    reps: list[dict[int, int]]
    ech: Echelon

    @property
    def dim(self) -> int:
        return len(self.reps)

    @classmethod
    def build(cls, cx: BarComplex, k: int) -> "_Basis":
        p = cx.p
        ech = Echelon(p, track=True)
        if k == 0:
            return cls(cx, 0, [{0: 1}], _zero_echelon(p))
        cx._check(k + 1)
        for s in cx.tuples(k - 1):
            ech.add(cx.d_image(s))
        rows = [cx.d_row(t) for t in cx.tuples(k + 1)]
        Z = nullspace(rows, cx.m**k, p)
        target = len(Z) - ech.rank
        reps = []
        for z in Z:
            if len(reps) == target:
                break
            if ech.add(z, {len(reps): 1}):
                reps.append(z)
        assert len(reps) == target
        return cls(cx, k, reps, ech)

    def coords(self, f: dict[int, int]) -> tuple[int, ...]:
        if self.k == 0:
            return (f.get(0, 0) % self.cx.p,)
        res, tag = self.ech.reduce(f, {})
        if res:
            raise NotCocycle("cochain is not a cocycle")
        p = self.cx.p
        return tuple((-tag.get(j, 0)) % p for j in range(self.dim))

    def cocycle(self, coords) -> dict[int, int]:
        p = self.cx.p
        out: dict[int, int] = {}
        for c, rep in zip(coords, self.reps):
            if c % p:
                for code, v in rep.items():
                    w = (out.get(code, 0) + c * v) % p
                    if w:
                        out[code] = w
                    else:
                        out.pop(code, None)
        return out


def _zero_echelon(p):
    return Echelon(p, track=True)


@dataclass(frozen=True)
class CohClass:
    cx: BarComplex = field(compare=False, repr=False)
    degree: int
    coords: tuple[int, ...]

    def _same(self, other: "CohClass"):
        if other.cx is not self.cx:
            raise MixedGroups("classes live on different complexes")

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return (self.cx is other.cx and self.degree == other.degree
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.cx), self.degree, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "CohClass") -> "CohClass":
        self._same(other)
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        p = self.cx.p
        return CohClass(self.cx, self.degree,
                        tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        p = self.cx.p
        return CohClass(self.cx, self.degree, tuple((-a) % p for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "CohClass":
        p = self.cx.p
        return CohClass(self.cx, self.degree, tuple((c * a) % p for a in self.coords))

    def __rmul__(self, c: int):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return cup(self, other)

    def __pow__(self, k: int):
        r = self.cx.one()
        for _ in range(k):
            r = cup(r, self)
        return r

    def cocycle(self) -> dict[int, int]:
        return self.cx.basis(self.degree).cocycle(self.coords)


# -- operations --------------------------------------------------------------------

def bar_cohomology(G: FiniteGroup, p: int, maxdeg: int) -> BarComplex:
    cx = BarComplex(G, p, maxdeg)
    cx.dims(maxdeg)
    return cx


def cup_cochains(cx: BarComplex, f, k, g, l) -> dict[int, int]:
    p = cx.p
    shift = cx.m**l
    out = {}
    for a, u in f.items():
        for b, v in g.items():
            w = (u * v) % p
            if w:
                out[a * shift + b] = w
    return out


def cup(x: CohClass, y: CohClass) -> CohClass:
    x._same(y)
    cx = x.cx
    k, l = x.degree, y.degree
    if k == 0:
        return y.scale(x.coords[0])
    if l == 0:
        return x.scale(y.coords[0])
    f = cup_cochains(cx, x.cocycle(), k, y.cocycle(), l)
    return cx.cls(f, k + l)


def restrict_cochain(cG: BarComplex, cH: BarComplex, sub: Subgroup, f, k) -> dict[int, int]:
    emb = sub.embedding
    out = {}
    for t in cH.tuples(k):
        v = f.get(cG.enc(tuple(emb[h] for h in t)), 0)
        if v:
            out[cH.enc(t)] = v
    return out


def _check_sub(cG: BarComplex, cH: BarComplex, sub: Subgroup):
    if sub.parent is not cG.G or sub.group is not cH.G:
        raise NotSubgroup("subgroup data does not match the complexes")
    if cG.p != cH.p:
        raise MixedGroups("primes differ")


def restriction(cG: BarComplex, cH: BarComplex, sub: Subgroup, x: CohClass) -> CohClass:
    _check_sub(cG, cH, sub)
    if x.cx is not cG:
        raise MixedGroups("class does not live on the ambient group")
    if x.degree == 0:
        return CohClass(cH, 0, x.coords)
    return cH.cls(restrict_cochain(cG, cH, sub, x.cocycle(), x.degree), x.degree)


def right_transversal(sub: Subgroup, choice: str = "min") -> list[int]:
    G = sub.parent
    seen = set()
    reps = []
    order = range(G.order) if choice == "min" else range(G.order - 1, -1, -1)
    for g in order:
        if g in seen:
            continue
        coset = {G.mul[h][g] for h in sub.embedding}
        seen |= coset
        reps.append(g)
    return sorted(reps) if choice == "min" else reps


def transfer_cochain(cH: BarComplex, cG: BarComplex, sub: Subgroup, f, k,
                     transversal: list[int] | None = None) -> dict[int, int]:
    """(tr f)(g_1..g_k) = sum_{t_0} f(h_1..h_k), where t_{i-1} g_i = h_i t_i."""
    G, p = cG.G, cG.p
    T = transversal or right_transversal(sub)
    Hpos = {g: i for i, g in enumerate(sub.embedding)}
    rep_of = {}
    for t in T:
        for h in sub.embedding:
            rep_of[G.mul[h][t]] = t
    # step[t][g] = (h as H-index, t')
    step = {}
    for t in T:
        for g in range(G.order):
            tg = G.mul[t][g]
            t2 = rep_of[tg]
            h = G.mul[tg][G.inv[t2]]
            step[(t, g)] = (Hpos[h], t2)
    eH = sub.group.identity
    out = {}
    for gs in cG.tuples(k):
        total = 0
        for t0 in T:
            t = t0
            hs = []
            dead = False
            for g in gs:
                h, t = step[(t, g)]
                if h == eH:
                    dead = True
                    break
                hs.append(h)
            if dead:
                continue
            total += f.get(cH.enc(tuple(hs)), 0)
        total %= p
        if total:
            out[cG.enc(gs)] = total
    return out


def transfer(cH: BarComplex, cG: BarComplex, sub: Subgroup, x: CohClass,
             transversal: list[int] | None = None) -> CohClass:
    _check_sub(cG, cH, sub)
    if x.cx is not cH:
        raise MixedGroups("class does not live on the subgroup")
    if x.degree == 0:
        return CohClass(cG, 0, ((x.coords[0] * sub.index) % cG.p,))
    f = transfer_cochain(cH, cG, sub, x.cocycle(), x.degree, transversal)
    return cG.cls(f, x.degree)


def conjugation_action(cx: BarComplex, g: int, x: CohClass, ambient: FiniteGroup | None = None,
                       embedding=None) -> CohClass:
    """c_g x with (c_g f)(h_1..h_k) = f(g h_1 g^-1, ..., g h_k g^-1).

    ``g`` lies in ``ambient`` (default: the group itself), which must normalize
    the group of ``cx`` embedded via ``embedding``.
    """
    if x.cx is not cx:
        raise MixedGroups("class does not live on this complex")
    K = cx.G
    if ambient is None:
        ambient, embedding = K, list(range(K.order))
    pos = {a: i for i, a in enumerate(embedding)}
    conj = {}
    for h in range(K.order):
        c = ambient.conj(g, embedding[h])
        if c not in pos:
            raise NotSubgroup("element does not normalize the subgroup")
        conj[h] = pos[c]
    if x.degree == 0:
        return x
    f = x.cocycle()
    k = x.degree
    out = {}
    for t in cx.tuples(k):
        v = f.get(cx.enc(tuple(conj[h] for h in t)), 0)
        if v:
            out[cx.enc(t)] = v
    return cx.cls(out, k)


def linear_map_matrix(src: BarComplex, k: int, fn) -> list[list[int]]:
    """Matrix (columns = images of basis classes) of a linear map on H^k."""
    return [list(fn(c).coords) for c in src.gens(k)]


# -- ring models -------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantRing:
    """Invariants of Z[z0]/(p z0) (|z0| = 2) under z0 -> mu z0."""
    p: int
    multiplier: int
    exponent: int        # generator is z0^exponent

    @property
    def generator_degree(self) -> int:
        return 2 * self.exponent

    def invariant_degrees(self, maxdeg: int) -> list[int]:
        return [d for d in range(0, maxdeg + 1, 2)
                if d == 0 or pow(self.multiplier, d // 2, self.p) == 1]


def invariants_model(p: int, m: int, multiplier: int) -> InvariantRing:
    mu = multiplier % p
    if mu == 0:
        raise BadMultiplier("multiplier must be a unit mod p")
    if pow(mu, m, p) != 1:
        raise BadMultiplier(f"multiplier {multiplier} has order not dividing {m}")
    e = 1
    while pow(mu, e, p) != 1:
        e += 1
    return InvariantRing(p, mu, e)


@dataclass(frozen=True)
class CyclicIntegral:
    """H^*(C_k; Z) = Z[z0]/(k z0) with |z0| = 2; an element is {power: residue}."""
    k: int
    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def make(cls, k, terms: dict[int, int]):
        clean = {}
        for e, c in terms.items():
            c = c % k if e > 0 else c
            if c:
                clean[e] = c
        return cls(k, tuple(sorted(clean.items())))

    def __mul__(self, other: "CyclicIntegral"):
        if other.k != self.k:
            raise MixedGroups("different cyclic groups")
        t: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return CyclicIntegral.make(self.k, t)

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms:
            t[e] = t.get(e, 0) + c
        return CyclicIntegral.make(self.k, t)

    def coeff(self, e: int) -> int:
        return dict(self.terms).get(e, 0)


def z0(k: int) -> CyclicIntegral:
    return CyclicIntegral.make(k, {1: 1})


class Q8Model:
    """H^*(Q8; F2) = F2[a, b, P]/(a^2 + ab + b^2, a^2 b + a b^2), |a| = |b| = 1, |P| = 4.

    Normal form: monomials a^i b^j P^l with i <= 1, j <= 2 and (i, j) != (1, 3);
    rewriting uses a^2 -> ab + b^2 and b^3 -> 0.
    """

    def __init__(self, terms=None):
        self.terms = self._normal(terms or {})

    @staticmethod
    def _normal(terms):
        work = {m: c % 2 for m, c in terms.items() if c % 2}
        out: dict = {}
        while work:
            (i, j, l), c = work.popitem()
            if i >= 2:
                for mono in ((i - 1, j + 1, l), (i - 2, j + 2, l)):
                    work[mono] = (work.get(mono, 0) + 1) % 2
                    if not work[mono]:
                        del work[mono]
                continue
            if j >= 3:
                continue
            out[(i, j, l)] = (out.get((i, j, l), 0) + 1) % 2
            if not out[(i, j, l)]:
                del out[(i, j, l)]
        return out

    @classmethod
    def gen(cls, name):
        return cls({{"a": (1, 0, 0), "b": (0, 1, 0), "P": (0, 0, 1)}[name]: 1})

    @classmethod
    def one(cls):
        return cls({(0, 0, 0): 1})

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = (t.get(m, 0) + c) % 2
        return Q8Model(t)

    def __mul__(self, other):
        t: dict = {}
        for (i, j, l), _ in self.terms.items():
            for (i2, j2, l2), _ in other.terms.items():
                m = (i + i2, j + j2, l + l2)
                t[m] = (t.get(m, 0) + 1) % 2
        return Q8Model(t)

    def __eq__(self, other):
        return isinstance(other, Q8Model) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def degree_part(self, d):
        return Q8Model({m: c for m, c in self.terms.items() if m[0] + m[1] + 4 * m[2] == d})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j, l) in sorted(self.terms, key=lambda m: (m[0] + m[1] + 4 * m[2], m)):
            s = "".join(["a" * i, f"b^{j}" if j > 1 else "b" * j, f"P^{l}" if l > 1 else "P" * l])
            parts.append(s or "1")
        return " + ".join(parts)

    @staticmethod
    def graded_dims(maxdeg: int) -> tuple[int, ...]:
        basis = [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
        return tuple(sum(1 for i, j in basis for l in range(maxdeg // 4 + 1)
                         if i + j + 4 * l == d) for d in range(maxdeg + 1))


def q8_c3_action(x: Q8Model) -> Q8Model:
    """The ring automorphism a -> b, b -> a + b (P fixed)."""
    a, b = Q8Model.gen("a"), Q8Model.gen("b")
    out = Q8Model()
    for (i, j, l), _ in x.terms.items():
        term = Q8Model.one()
        for _ in range(i):
            term = term * b
        for _ in range(j):
            term = term * (a + b)
        for _ in range(l):
            term = term * Q8Model.gen("P")
        out = out + term
    return out


def lambda_tensor_poly_dims(nv: int, nw: int, maxdeg: int) -> tuple[int, ...]:
    """Graded dimensions of Lambda(V) (x) P(W), |V| = 1, |W| = 2, dim V = nv, dim W = nw."""
    from math import comb
    out = []
    for d in range(maxdeg + 1):
        s = 0
        for a in range(0, min(nv, d) + 1):
            rest = d - a
            if rest % 2:
                continue
            b = rest // 2
            s += comb(nv, a) * comb(b + nw - 1, nw - 1 if nw else 0) if nw else (comb(nv, a) if b == 0 else 0)
        out.append(s)
    return tuple(out)
