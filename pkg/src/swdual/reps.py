"""Complex characters, real representation rings and conjugation representations.

Character tables come from the Burnside-Dixon method: the class-multiplication
matrices are simultaneously diagonalized over F_q for a prime q = 1 mod exp(G),
and the resulting modular values are lifted to Z[zeta_e] through the
eigenvalue multiplicities of each element.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exact.cyclotomic import Cyclo
from .groups import FiniteGroup, NotSubgroup, Subgroup


class NotAClassFunction(ValueError):
    pass


class NotStable(ValueError):
    pass


# -- modular linear algebra ------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime q = 1 mod exponent with q > 2 |G|."""
    q = exponent + 1
    while q <= 2 * order or not _is_prime(q):
        q += exponent
    return q


def _primitive_root(q: int) -> int:
    fs = [d for d in range(2, q) if (q - 1) % d == 0 and _is_prime(d)]
    g = 2
    while any(pow(g, (q - 1) // f, q) == 1 for f in fs):
        g += 1
    return g


def _rref(vectors: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(v) for v in vectors]
    piv = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        k = next((i for i in range(r, len(rows)) if rows[i][c] % q), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        inv = pow(rows[r][c], -1, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    return rows[:r], piv


def _nullspace_mod(A: list[list[int]], q: int) -> list[list[int]]:
    n = len(A[0])
    R, piv = _rref(A, q)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(R, piv):
            v[c] = (-row[f]) % q
        out.append(v)
    return out


def _charpoly_mod(A: list[list[int]], q: int) -> list[int]:
    """Characteristic polynomial (low degree first) via Hessenberg reduction."""
    n = len(A)
    H = [row[:] for row in A]
    for j in range(n - 2):
        k = next((i for i in range(j + 1, n) if H[i][j] % q), None)
        if k is None:
            continue
        if k != j + 1:
            H[k], H[j + 1] = H[j + 1], H[k]
            for row in H:
                row[k], row[j + 1] = row[j + 1], row[k]
        inv = pow(H[j + 1][j], -1, q)
        for i in range(j + 2, n):
            f = H[i][j] * inv % q
            if f:
                H[i] = [(x - f * y) % q for x, y in zip(H[i], H[j + 1])]
                for row in H:
                    row[j + 1] = (row[j + 1] + f * row[i]) % q
    # recurrence on leading principal minors of x - H
    P = [[1]]
    for m in range(1, n + 1):
        hm = H[m - 1][m - 1]
        prev = P[m - 1]
        new = [0] * (m + 1)
        for d, c in enumerate(prev):
            new[d + 1] = (new[d + 1] + c) % q
            new[d] = (new[d] - hm * c) % q
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1] % q
            coef = H[i - 1][m - 1] * prod % q
            if coef:
                for d, c in enumerate(P[i - 1]):
                    new[d] = (new[d] - coef * c) % q
        P.append(new)
    return P[n]


def _roots_mod(poly: list[int], q: int) -> list[int]:
    out = []
    for x in range(q):
        v = 0
        for c in reversed(poly):
            v = (v * x + c) % q
        if v == 0:
            out.append(x)
    return out


# -- characters --------------------------------------------------------------------------

class Character:
    """Class function with values in Z[zeta_N], N = exponent of G."""

    def __init__(self, table: "CharacterTable", values):
        self.table = table
        self.values = tuple(values)
        if len(self.values) != len(table.G.classes):
            raise NotAClassFunction("one value per conjugacy class required")

    @property
    def G(self):
        return self.table.G

    def __call__(self, g: int) -> Cyclo:
        return self.values[self.G.class_of[g]]

    @property
    def degree(self) -> int:
        return self.values[0].to_int()

    def __add__(self, other):
        return Character(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return Character(self.table, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return Character(self.table, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, int):
            return Character(self.table, [a * other for a in self.values])
        return Character(self.table, [a * b for a, b in zip(self.values, other.values)])

    __rmul__ = __mul__

    def conj(self):
        return Character(self.table, [a.conj() for a in self.values])

    def __eq__(self, other):
        return isinstance(other, Character) and self.table is other.table and \
            all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash(tuple(hash(v) for v in self.values))

    def inner(self, other: "Character") -> int:
        return self.table.inner(self, other)

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.values)

    def spectrum(self, g: int) -> tuple[int, ...]:
        """Multiplicities m_s of the eigenvalues exp(2 pi i s / o) at g (o = order of g)."""
        return self.table.spectrum(self, g)

    def __repr__(self):
        return f"Character({[str(v) for v in self.values]})"


class CharacterTable:
    def __init__(self, G: FiniteGroup):
        self.G = G
        self.N = G.exponent
        self.classes = G.classes
        self.sizes = [c.size for c in self.classes]
        self.r = len(self.classes)
        cls = G.class_of
        self.inv_class = [cls[G.inv[c.rep]] for c in self.classes]
        self._spec_cache: dict = {}
        self.irreducibles = self._dixon()

    # structure ------------------------------------------------------------------------
    @cached_property
    def class_coefficients(self):
        """a[i][j][k] = #{x in C_i : x^{-1} g_k in C_j}."""
        G, r = self.G, self.r
        cls = G.class_of
        a = [[[0] * r for _ in range(r)] for _ in range(r)]
        for k, C in enumerate(self.classes):
            g = C.rep
            for x in range(G.order):
                a[cls[x]][cls[G.mul[G.inv[x]][g]]][k] += 1
        return a

    def _dixon(self) -> list[Character]:
        G, r = self.G, self.r
        q = dixon_prime(G.order, self.N)
        self.q = q
        a = self.class_coefficients
        mats = [[[a[i][j][k] % q for k in range(r)] for i in range(r)] for j in range(r)]
        spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
        for M in mats[1:]:
            if all(len(S) == 1 for S in spaces):
                break
            nxt = []
            for S in spaces:
                if len(S) == 1:
                    nxt.append(S)
                    continue
                B, piv = _rref(S, q)
                d = len(B)
                # M acts on column vectors; image of basis vector b_i in pivot coords
                img = [[sum(M[row][c] * b[c] for c in range(r)) % q for row in range(r)] for b in B]
                A = [[img[i][piv[l]] for i in range(d)] for l in range(d)]
                poly = _charpoly_mod(A, q)
                roots = _roots_mod(poly, q)
                if len(roots) == 1:
                    nxt.append(B)
                    continue
                for lam in roots:
                    shifted = [[(A[l][i] - (lam if l == i else 0)) % q for i in range(d)]
                               for l in range(d)]
                    for coeffs in [_nullspace_mod(shifted, q)]:
                        vecs = [[sum(c * B[i][t] for i, c in enumerate(v)) % q for t in range(r)]
                                for v in coeffs]
                        nxt.append(_rref(vecs, q)[0])
            spaces = nxt
        if any(len(S) != 1 for S in spaces):
            raise ArithmeticError("class matrices failed to split the class algebra")
        z = _primitive_root(q)
        zeta = pow(z, (q - 1) // self.N, q)
        self.zeta_q = zeta
        chars = []
        for S in spaces:
            w = S[0]
            inv0 = pow(w[0], -1, q)
            w = [x * inv0 % q for x in w]
            s = sum(w[k] * w[self.inv_class[k]] * pow(self.sizes[k], -1, q) for k in range(r)) % q
            d2 = G.order * pow(s, -1, q) % q
            d = next(t for t in range(1, G.order + 1) if t * t == d2)
            modvals = [w[k] * d * pow(self.sizes[k], -1, q) % q for k in range(r)]
            chi = self._lift(modvals, d)
            chi._modvals = modvals
            chars.append(chi)
        triv = [c for c in chars if all(v == 1 for v in c.values)]
        rest = [c for c in chars if c is not triv[0]]
        rest.sort(key=lambda c: (c.degree, tuple(-x for v in c.values for x in v.reduced())))
        return [triv[0]] + rest

    def _lift(self, modvals: list[int], d: int) -> Character:
        G, q, N = self.G, self.q, self.N
        cls = G.class_of
        vals = []
        for C in self.classes:
            g = C.rep
            o = G.element_orders[g]
            zo = pow(self.zeta_q, N // o, q)
            pw = [G.identity]
            for _ in range(o - 1):
                pw.append(G.mul[pw[-1]][g])
            coeffs = [0] * N
            total = 0
            oinv = pow(o, -1, q)
            for s in range(o):
                m = sum(modvals[cls[pw[l]]] * pow(zo, (-s * l) % o, q) for l in range(o)) * oinv % q
                if m > d:
                    raise ArithmeticError("eigenvalue multiplicity out of range; bad prime")
                coeffs[s * (N // o)] = m
                total += m
            if total != d:
                raise ArithmeticError("multiplicities do not add up to the degree")
            vals.append(Cyclo(N, coeffs))
        return Character(self, vals)

    # operations -------------------------------------------------------------------------
    def inner(self, chi: Character, psi: Character) -> int:
        tot = Cyclo.integer(self.N, 0)
        for k in range(self.r):
            tot = tot + chi.values[k] * psi.values[k].conj() * self.sizes[k]
        v = tot.to_int()
        if v % self.G.order:
            raise NotAClassFunction("inner product is not an integer")
        return v // self.G.order

    def character(self, values) -> Character:
        return Character(self, values)

    def from_function(self, fn) -> Character:
        """Class function from per-element values; verified constant on classes."""
        vals = []
        for C in self.classes:
            v = fn(C.rep)
            if not isinstance(v, Cyclo):
                v = Cyclo.integer(self.N, int(v))
            for x in C.elements[1:]:
                w = fn(x)
                if not isinstance(w, Cyclo):
                    w = Cyclo.integer(self.N, int(w))
                if w != v:
                    raise NotAClassFunction("function is not constant on a conjugacy class")
            vals.append(v)
        return Character(self, vals)

    def trivial(self) -> Character:
        return self.irreducibles[0]

    def regular(self) -> Character:
        return Character(self, [Cyclo.integer(self.N, self.G.order if k == 0 else 0)
                                for k in range(self.r)])

    def decompose(self, chi: Character) -> list[int]:
        return [chi.inner(x) for x in self.irreducibles]

    def spectrum(self, chi: Character, g: int) -> tuple[int, ...]:
        for i, x in enumerate(self.irreducibles):
            if x is chi:
                return self.irr_spectrum(i, g)
        return self.exact_spectrum(chi, g)

    def irr_spectrum(self, i: int, g: int) -> tuple[int, ...]:
        """Spectrum of the i-th irreducible by a DFT over F_q.

        Multiplicities of a genuine character lie in [0, degree] and degree < q,
        so the residues determine them.
        """
        key = (i, self.G.class_of[g])
        if key in self._spec_cache:
            return self._spec_cache[key]
        G, q = self.G, self.q
        chi = self.irreducibles[i]
        g = self.classes[key[1]].rep
        o = G.element_orders[g]
        zo = pow(self.zeta_q, self.N // o, q)
        pw = [G.identity]
        for _ in range(o - 1):
            pw.append(G.mul[pw[-1]][g])
        cls = G.class_of
        vals = [chi._modvals[cls[x]] for x in pw]
        zpw = [pow(zo, t, q) for t in range(o)]
        oinv = pow(o, -1, q)
        out = []
        for s in range(o):
            m = sum(v * zpw[(-s * l) % o] for l, v in enumerate(vals)) * oinv % q
            if m > chi.degree:
                raise ArithmeticError("multiplicity exceeds the degree")
            out.append(m)
        if sum(out) != chi.degree:
            raise ArithmeticError("multiplicities do not add up to the degree")
        self._spec_cache[key] = tuple(out)
        return self._spec_cache[key]

    def exact_spectrum(self, chi: Character, g: int) -> tuple[int, ...]:
        """Spectrum by discrete Fourier inversion over the cyclotomic values."""
        G, N = self.G, self.N
        o = G.element_orders[g]
        pw = [G.identity]
        for _ in range(o - 1):
            pw.append(G.mul[pw[-1]][g])
        out = []
        for s in range(o):
            tot = Cyclo.integer(N, 0)
            for l in range(o):
                tot = tot + chi(pw[l]) * Cyclo.root(N, (-s * l * (N // o)) % N)
            v = tot.to_int()
            if v % o:
                raise NotAClassFunction("eigenvalue multiplicity is not an integer")
            out.append(v // o)
        return tuple(out)

    def fs_indicator(self, chi: Character) -> int:
        G = self.G
        tot = Cyclo.integer(self.N, 0)
        for k, C in enumerate(self.classes):
            tot = tot + chi(G.mul[C.rep][C.rep]) * self.sizes[k]
        v = tot.to_int()
        assert v % G.order == 0
        return v // G.order

    def orthogonality_ok(self) -> bool:
        X = self.irreducibles
        for i, a in enumerate(X):
            for j, b in enumerate(X):
                if a.inner(b) != int(i == j):
                    return False
        return sum(x.degree ** 2 for x in X) == self.G.order

    def column_orthogonality_ok(self) -> bool:
        X = self.irreducibles
        for k in range(self.r):
            for l in range(self.r):
                tot = Cyclo.integer(self.N, 0)
                for x in X:
                    tot = tot + x.values[k] * x.values[l].conj()
                expect = self.G.order // self.sizes[k] if k == l else 0
                if tot != expect:
                    return False
        return True


_TABLES: dict[int, CharacterTable] = {}


def character_table(G: FiniteGroup) -> CharacterTable:
    key = id(G)
    if key not in _TABLES:
        _TABLES[key] = CharacterTable(G)
    return _TABLES[key]


# -- real representations ------------------------------------------------------------------

@dataclass(frozen=True)
class RealIrrep:
    """An irreducible real representation, through its complexification."""
    index: int                     # position in the RO(G) basis
    kind: str                      # "real", "complex", "quaternionic"
    complex_index: tuple[int, ...]  # indices of the complex constituents (one or a pair)
    character: Character = field(compare=False, repr=False)
    name: str = ""

    @property
    def dim(self) -> int:
        return self.character.degree

    @property
    def fs(self) -> int:
        return {"real": 1, "complex": 0, "quaternionic": -1}[self.kind]


class RealRepRing:
    """RO(G) with basis the real irreducibles, ordered by (dimension, table order)."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.table = character_table(G)
        X = self.table.irreducibles
        ind = [self.table.fs_indicator(x) for x in X]
        self.fs = ind
        items = []
        used = set()
        for i, x in enumerate(X):
            if i in used:
                continue
            if ind[i] == 1:
                items.append(("real", (i,), x))
            elif ind[i] == -1:
                items.append(("quaternionic", (i,), x * 2))
            else:
                xc = x.conj()
                j = next(t for t, y in enumerate(X) if y == xc)
                used.add(j)
                items.append(("complex", (i, j), x + xc))
            used.add(i)
        order = sorted(range(len(items)), key=lambda t: (items[t][2].degree, t))
        self.irreps = [RealIrrep(n, items[t][0], items[t][1], items[t][2])
                       for n, t in enumerate(order)]
        self.names = [f"r{n}" for n in range(len(self.irreps))]

    def __len__(self):
        return len(self.irreps)

    def set_names(self, names: dict[int, str]):
        for k, v in names.items():
            self.names[k] = v

    def name_of(self, k: int) -> str:
        return self.names[k]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def basis(self, k) -> "RealRepClass":
        if isinstance(k, str):
            k = self.index(k)
        return RealRepClass(self, tuple(int(i == k) for i in range(len(self))))

    def zero(self):
        return RealRepClass(self, (0,) * len(self))

    def decompose(self, chi: Character) -> "RealRepClass":
        """Real class whose complexification has character ``chi``."""
        coeffs = []
        for R in self.irreps:
            m = chi.inner(self.table.irreducibles[R.complex_index[0]])
            if R.kind == "quaternionic":
                if m % 2:
                    raise NotAClassFunction("quaternionic constituent with odd multiplicity")
                m //= 2
            coeffs.append(m)
        W = RealRepClass(self, tuple(coeffs))
        if W.character != chi:
            raise NotAClassFunction("character is not the complexification of a real class")
        return W

    def regular(self) -> "RealRepClass":
        return self.decompose(self.table.regular())

    def trivial(self) -> "RealRepClass":
        return self.basis(0)


@dataclass(frozen=True)
class RealRepClass:
    ring: RealRepRing = field(compare=False, repr=False)
    coeffs: tuple[int, ...]

    def __add__(self, other):
        return RealRepClass(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return RealRepClass(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RealRepClass(self.ring, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int):
        return RealRepClass(self.ring, tuple(k * a for a in self.coeffs))

    @property
    def dim(self) -> int:
        return sum(c * R.dim for c, R in zip(self.coeffs, self.ring.irreps))

    @property
    def character(self) -> Character:
        t = self.ring.table
        out = Character(t, [Cyclo.integer(t.N, 0)] * t.r)
        for c, R in zip(self.coeffs, self.ring.irreps):
            if c:
                out = out + R.character * c
        return out

    def spectrum(self, g: int) -> tuple[int, ...]:
        """Eigenvalue multiplicities of the complexification at g."""
        t = self.ring.table
        o = self.ring.G.element_orders[g]
        out = [0] * o
        for c, R in zip(self.coeffs, self.ring.irreps):
            if not c:
                continue
            for i in R.complex_index:
                w = 2 * c if R.kind == "quaternionic" else c
                for s, m in enumerate(t.irr_spectrum(i, g)):
                    out[s] += w * m
        return tuple(out)

    def is_genuine(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def terms(self) -> dict[str, int]:
        return {self.ring.names[i]: c for i, c in enumerate(self.coeffs) if c}

    def __repr__(self):
        return " + ".join(f"{c}*{n}" for n, c in self.terms().items()) or "0"


# -- restriction / induction ------------------------------------------------------------------

def restrict(chi: Character, sub: Subgroup) -> Character:
    if sub.parent is not chi.G:
        raise NotSubgroup("subgroup of a different group")
    tH = character_table(sub.group)
    vals = []
    for C in sub.group.classes:
        v = chi(sub.embedding[C.rep])
        vals.append(_recast(v, tH.N))
    return Character(tH, vals)


def _recast(v: Cyclo, M: int) -> Cyclo:
    """Move a value of Z[zeta_N] into Z[zeta_M] (possible when it lies there)."""
    if v.N == M:
        return v
    if M % v.N == 0:
        return v.lift(M)
    L = v.N * M // _gcd(v.N, M)
    big = v.lift(L)
    s = L // M
    # keep only coefficients at multiples of s after reducing to a canonical form
    red = list(big.c)
    out = [0] * M
    for i, a in enumerate(red):
        if a and i % s:
            break
        if a:
            out[i // s] += a
    else:
        cand = Cyclo(M, out)
        if cand.lift(L) == big:
            return cand
    # fallback: search via the spectrum representation is not needed for our groups
    raise NotAClassFunction("value does not live in the smaller cyclotomic field")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def induce(chi: Character, sub: Subgroup) -> Character:
    G = sub.parent
    tG = character_table(G)
    Hpos = {g: i for i, g in enumerate(sub.embedding)}
    vals = []
    for C in G.classes:
        g = C.rep
        tot = Cyclo.integer(tG.N, 0)
        for x in range(G.order):
            y = G.conj(x, g)
            if y in Hpos:
                tot = tot + _recast(chi(Hpos[y]), tG.N)
        vals.append(tot.exact_div(sub.order))
    return Character(tG, vals)


def restrict_real(W: RealRepClass, sub: Subgroup, ring_H: RealRepRing | None = None) -> RealRepClass:
    ring_H = ring_H or real_ring(sub.group)
    return ring_H.decompose(restrict(W.character, sub))


_RINGS: dict[int, RealRepRing] = {}


def real_ring(G: FiniteGroup) -> RealRepRing:
    if id(G) not in _RINGS:
        _RINGS[id(G)] = RealRepRing(G)
    return _RINGS[id(G)]


# -- determinants and spectra -------------------------------------------------------------------

def det_character(W) -> tuple[int, ...]:
    """Determinant of a real (virtual) representation, one sign per class."""
    G = W.ring.G if isinstance(W, RealRepClass) else W.G
    out = []
    for C in G.classes:
        o = G.element_orders[C.rep]
        spec = W.spectrum(C.rep)
        e = sum(s * m for s, m in enumerate(spec)) % o
        if o % 2 == 0 and e == o // 2:
            out.append(-1)
        elif e == 0:
            out.append(1)
        else:
            raise NotAClassFunction("determinant is not real; class is not real")
    return tuple(out)


def det_is_trivial(W) -> bool:
    return all(s == 1 for s in det_character(W))


def line_multipliers(W, g: int) -> list[int]:
    """Multiset of eigenvalue exponents s (eigenvalue exp(2 pi i s/o)) of W at g."""
    spec = W.spectrum(g)
    out = []
    for s, m in enumerate(spec):
        if m < 0:
            raise NotAClassFunction("virtual class has negative multiplicities")
        out += [s] * m
    return out


def signed_spectrum(W, g: int) -> tuple[int, ...]:
    return W.spectrum(g)


# -- conjugation representations ----------------------------------------------------------------

def character_from_matrices(G: FiniteGroup, mats) -> Character:
    """Character of an integer matrix representation indexed by group elements."""
    t = character_table(G)
    A = np.asarray(mats, dtype=np.int64)
    for b in G.generators.values():
        if not np.array_equal(A @ A[b], A[G.T[:, b]]):
            raise NotStable("matrices do not form a representation")
    traces = np.trace(A, axis1=1, axis2=2)
    return t.from_function(lambda g: int(traces[g]))


def extend_to_group(G: FiniteGroup, gen_mats: dict[str, list[list[int]]]):
    """Matrices for all elements from images of the named generators (checked)."""
    n = len(next(iter(gen_mats.values())))
    mats = {G.identity: np.eye(n, dtype=np.int64)}
    stack = [G.identity]
    gens = [(G.generators[k], np.asarray(M, dtype=np.int64)) for k, M in gen_mats.items()]
    while stack:
        x = stack.pop()
        for g, M in gens:
            y = G.mul[x][g]
            P = mats[x] @ M
            if y in mats:
                if not np.array_equal(mats[y], P):
                    raise NotStable("generator images do not define a representation")
            else:
                mats[y] = P
                stack.append(y)
    if len(mats) != G.order:
        raise NotStable("generators do not reach the whole group")
    return [mats[g].tolist() for g in range(G.order)]


def honda_lattice_matrices(p: int, e: int):
    """Conjugation by zeta and tau on Z{zeta^i tau^j : 0 <= i, j < n}, n = p - 1.

    tau: zeta^i tau^j -> zeta^{ie} tau^j;  zeta: zeta^i tau^j -> zeta^{i+1-e^j} tau^j,
    with exponents read mod p and zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
    Column (i, j) -> index j*n + i.
    """
    n = p - 1

    def zpow(a):
        a %= p
        v = [0] * n
        if a < n:
            v[a] = 1
        else:
            v = [-1] * n
        return v

    def build(fn):
        M = [[0] * (n * n) for _ in range(n * n)]
        for j in range(n):
            for i in range(n):
                col = j * n + i
                v = zpow(fn(i, j))
                for a in range(n):
                    M[j * n + a][col] += v[a]
        return M

    Mtau = build(lambda i, j: i * e)
    Mzeta = build(lambda i, j: i + 1 - pow(e, j, p))
    return Mzeta, Mtau


@dataclass
class ConjugationRep:
    """Integer matrices of a conjugation action, with character and RO(G) class."""
    group: FiniteGroup
    matrices: list = field(repr=False)
    character: Character = field(repr=False)
    real_class: RealRepClass

    @property
    def dim(self) -> int:
        return len(self.matrices[0])


def _rep_from_matrices(G: FiniteGroup, mats) -> ConjugationRep:
    chi = character_from_matrices(G, mats)
    return ConjugationRep(G, mats, chi, real_ring(G).decompose(chi))


def order_conjugation_rep(units, basis=None) -> ConjugationRep:
    """Conjugation of the unit group on an order (or on a stable sublattice ``basis``)."""
    from .orders import NonIntegralEntries, conj_action_matrix
    O = units.order_ring
    try:
        mats = [conj_action_matrix(O, u, basis) for u in units.elements]
    except NonIntegralEntries as exc:
        raise NotStable(str(exc)) from exc
    return _rep_from_matrices(units.group, mats)


def order_left_rep(units) -> ConjugationRep:
    """Left multiplication of the unit group on its order, x -> u x."""
    O = units.order_ring
    d = O.d
    mats = []
    for u in units.elements:
        cols = [O.mul(u, tuple(int(a == b) for b in range(d))) for a in range(d)]
        mats.append([[int(cols[v][w]) for v in range(d)] for w in range(d)])
    return _rep_from_matrices(units.group, mats)


def honda_conjugation_rep(p: int, e: int, G: FiniteGroup | None = None) -> ConjugationRep:
    """V = R (x) Z(zeta_p){1, tau, ..., tau^{n-1}} for G = C_p x| C_{n^2}, n = p - 1."""
    n = p - 1
    G = G or make_honda_group(p, e)
    Mz, Mt = honda_lattice_matrices(p, e)
    mats = extend_to_group(G, {"z": Mz, "t": Mt})
    return _rep_from_matrices(G, mats)


def make_honda_group(p: int, e: int) -> FiniteGroup:
    from .groups import make_metacyclic
    n = p - 1
    return make_metacyclic(p, n * n, e, "z", "t", f"G(p={p})")


@dataclass(frozen=True)
class HondaLatticeCheck:
    p: int
    precision: int
    det_valuation: int       # p-adic valuation of det of the lattice basis in O_n coordinates
    stable: bool             # conjugation by zeta and tau matches the integer matrices mod p^N

    @property
    def ok(self) -> bool:
        return self.stable and self.det_valuation < self.precision


def honda_lattice_in_On(R, zt) -> HondaLatticeCheck:
    """Realize {zeta^i tau^j} inside O_n / p^N and compare with the integer action matrices."""
    p, n, N = R.p, R.n, R.N
    m = R.mod
    zpow = [R.one()]
    for _ in range(n):
        zpow.append(R.mul(zpow[-1], zt.zeta))
    tpow = [R.one()]
    for _ in range(n):
        tpow.append(R.mul(tpow[-1], zt.tau))
    basis = [R.mul(zpow[i], tpow[j]) for j in range(n) for i in range(n)]

    def flat(x):
        return [c for a in x for c in a]

    from .exact.intmat import det as _det
    D = _det([flat(b) for b in basis])
    v = 0
    D %= m
    if D == 0:
        v = N
    else:
        while D % p == 0:
            D //= p
            v += 1
    Mz, Mt = honda_lattice_matrices(p, zt.e)
    zinv = R.pow(zt.zeta, p - 1)
    tinv = R.pow(zt.tau, n * n - 1)
    stable = True
    for M, (g, gi) in ((Mz, (zt.zeta, zinv)), (Mt, (zt.tau, tinv))):
        for col, b in enumerate(basis):
            img = R.mul(R.mul(g, b), gi)
            pred = R.zero()
            for row in range(n * n):
                if M[row][col]:
                    pred = R.add(pred, R.smul(M[row][col], basis[row]))
            if img != pred:
                stable = False
    return HondaLatticeCheck(p, N, v, stable)


# -- the named generators of RO(C_p x| C_{n^2}) -------------------------------------------

@dataclass(frozen=True)
class RegularDecomposition:
    """rho_G against the list 1, sigma, lambda_m, Lambda_m (each used once)."""
    names: tuple[str, ...]
    classes: tuple[RealRepClass, ...]
    total: RealRepClass
    regular: RealRepClass
    lambda_irreducible: tuple[bool, ...]
    Lambda_distinct: bool

    @property
    def ok(self) -> bool:
        return self.total == self.regular

    @property
    def count(self) -> int:
        return len(self.names)


def _is_irreducible(W: RealRepClass) -> bool:
    return sorted(c for c in W.coeffs if c) == [1]


def metacyclic_generators(G: FiniteGroup, p: int, m: int) -> list[tuple[str, RealRepClass]]:
    """1, sigma, lambda_k (1 <= k < m/2) inflated from C_m, and Lambda_k = Ind alpha_k.

    Elements of ``G`` are indexed as zeta^a tau^j -> a*m + j, so the quotient
    map to C_m is ``g -> g % m``.
    """
    t = character_table(G)
    ring = real_ring(G)
    N = t.N

    def inflate(k):
        return t.from_function(
            lambda g: Cyclo.root(N, (N // m) * k * (g % m)) + Cyclo.root(N, -(N // m) * k * (g % m)))

    out = [("1", ring.trivial())]
    out.append(("sigma", ring.decompose(t.from_function(lambda g: (-1) ** (g % m)))))
    out += [(f"lambda_{k}", ring.decompose(inflate(k))) for k in range(1, (m - 2) // 2 + 1)]
    Cp = G.subgroup([a * m for a in range(p)])
    tp = character_table(Cp.group)
    M = tp.N
    expo = [g // m for g in Cp.embedding]
    for k in range(1, (p - 1) // 2 + 1):
        alpha = tp.from_function(
            lambda h: Cyclo.root(M, k * expo[h] * (M // p)) + Cyclo.root(M, -k * expo[h] * (M // p)))
        out.append((f"Lambda_{k}", ring.decompose(induce(alpha, Cp))))
    return out


def regular_decomposition(G: FiniteGroup, p: int, m: int) -> RegularDecomposition:
    gens = metacyclic_generators(G, p, m)
    ring = real_ring(G)
    total = ring.zero()
    for _, W in gens:
        total = total + W
    Lam = [W for nm, W in gens if nm.startswith("Lambda")]
    return RegularDecomposition(
        names=tuple(nm for nm, _ in gens),
        classes=tuple(W for _, W in gens),
        total=total,
        regular=ring.regular(),
        lambda_irreducible=tuple(_is_irreducible(W) for W in Lam),
        Lambda_distinct=len(set(Lam)) == len(Lam),
    )
