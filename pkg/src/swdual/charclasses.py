"""Characteristic classes of representations, evaluated on cyclic detectors.

On C_k the integral cohomology is Z[z0]/(k z0) with z0 = c1 of the line C(1),
so every class below is a residue mod k times a power of z0.  Real
representations enter through the eigenvalue multiplicities of a generator.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .cohomology import Q8Model
from .exact.symfun import MPoly, elementary, newton_eval, sym_to_elementary
from .groups import FiniteGroup, Subgroup
from .reps import (Character, RealRepClass, RealRepRing, character_table, real_ring,
                   restrict_real)


class NotSpinnable(ValueError):
    pass


class SpinAmbiguity(ArithmeticError):
    pass


class IncompleteTable(LookupError):
    pass


class IndexOutOfRange(ValueError):
    pass


class NoDecomposition(ValueError):
    pass


class TooManyVariables(ValueError):
    pass


# -- Chern classes on C_k ----------------------------------------------------------------

@dataclass(frozen=True)
class ChernData:
    k: int
    coeffs: tuple[int, ...]     # c_1, c_2, ... as residues mod k

    def c(self, i: int) -> int:
        if i == 0:
            return 1 % self.k if self.k > 1 else 0
        return self.coeffs[i - 1] if i <= len(self.coeffs) else 0

    def __add__(self, other: "ChernData") -> "ChernData":
        """Whitney sum."""
        if self.k != other.k:
            raise ValueError("different cyclic groups")
        a = (1,) + self.coeffs
        b = (1,) + other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % self.k
        return ChernData(self.k, tuple(out[1:]))


def chern_on_cyclic(multipliers, k: int) -> ChernData:
    """Total Chern class prod (1 + m z0) of the sum of lines C(m) on C_k."""
    poly = [1]
    for m in multipliers:
        new = poly + [0]
        for i in range(len(poly)):
            new[i + 1] = (new[i + 1] + m * poly[i]) % k
        poly = new
    return ChernData(k, tuple(x % k for x in poly[1:]))


def complex_structure(spectrum, k: int) -> list[int]:
    """Lines C(m) whose realification is the nontrivial part of a real rep of C_k.

    ``spectrum[s]`` is the multiplicity of exp(2 pi i s/k) in the complexification.
    Trivial summands are dropped; sign summands are paired into lines C(k/2);
    for each conjugate pair {m, k - m} the representative m < k/2 is used.
    """
    spectrum = list(spectrum)
    if len(spectrum) != k:
        raise NoDecomposition("spectrum length must equal the group order")
    for s in range(1, k):
        if spectrum[s] != spectrum[k - s]:
            raise NoDecomposition("spectrum is not closed under conjugation")
        if spectrum[s] < 0:
            raise NoDecomposition("virtual spectrum")
    lines = []
    for s in range(1, (k + 1) // 2):
        lines += [s] * spectrum[s]
    if k % 2 == 0:
        c = spectrum[k // 2]
        if c % 2:
            raise NotSpinnable("odd number of sign summands: w1 is nonzero")
        lines += [k // 2] * (c // 2)
    return lines


def lambda_on_cyclic(lines, k: int, d: int | None = None) -> int:
    """lambda = d c1 - c2 with 2d = c1 mod k, as a coefficient of z0^2 mod k.

    With ``d`` omitted every admissible d is tried and they must agree.
    """
    ch = chern_on_cyclic(lines, k)
    c1, c2 = ch.c(1), ch.c(2)
    if k % 2 == 0 and c1 % 2:
        raise NotSpinnable("c1 is odd")
    ds = [t for t in range(k) if (2 * t - c1) % k == 0] if d is None else [d]
    if not ds:
        raise NotSpinnable("no d with 2d = c1")
    vals = {(t * c1 - c2) % k for t in ds}
    if len(vals) != 1:
        raise SpinAmbiguity(f"spin choices give {sorted(vals)}")
    return vals.pop()


def _spectrum(W, g: int):
    return W.spectrum(g)


def lambda_on_detector(W: RealRepClass, g: int) -> int:
    """lambda(W) restricted to <g>, as a residue mod ord(g) times z0^2."""
    o = W.ring.G.element_orders[g]
    return lambda_on_cyclic(complex_structure(_spectrum(W, g), o), o)


# -- lambda tables ----------------------------------------------------------------------------

@dataclass
class LambdaTable:
    """lambda on the RO(G) basis, in units of a generator of H^4(G; Z_(p))."""
    ring: RealRepRing
    modulus: int
    generator: str
    values: list[int]
    provenance: list[str]           # "computed" | "paper-seeded"
    seeds: list[tuple[str, int]] = field(default_factory=list)
    checks: list[tuple[str, int, int, int]] = field(default_factory=list)  # name, value, detector, mod

    def value(self, name: str) -> int:
        return self.values[self.ring.index(name)]


def lambda_on_group(table: LambdaTable, W: RealRepClass) -> int:
    if W.ring is not table.ring:
        raise IncompleteTable("class lives over a different group")
    if any(v is None for c, v in zip(W.coeffs, table.values) if c):
        raise IncompleteTable("table lacks an entry needed for this class")
    return sum(c * v for c, v in zip(W.coeffs, table.values) if c) % table.modulus


def detector_lambda_table(ring: RealRepRing, g: int, generator: str = "z") -> LambdaTable:
    """Odd-p table read off the cyclic p-Sylow <g>; entries that are not spinnable stay empty."""
    o = ring.G.element_orders[g]
    vals, prov = [], []
    for k in range(len(ring)):
        try:
            vals.append(lambda_on_detector(ring.basis(k), g))
            prov.append("computed")
        except NotSpinnable:
            vals.append(None)
            prov.append("undefined")
    return LambdaTable(ring, o, generator, vals, prov)


def q8_lambda_table(ring: RealRepRing, q8: Subgroup, H: RealRepClass, H_ad: RealRepClass,
                    ci: int, seed_H: int = 1, seed_Had: int = 2) -> LambdaTable:
    """lambda on RO(G24) in units of lambda(H), propagated from two seeds.

    Every real irreducible is restricted to the 2-Sylow Q8, where it must lie in
    the span of 1, H_ad and H; restriction to Q8 is injective on H^4 because the
    index is odd.  Each entry is cross-checked on the detector C4 = <ci> (mod 4).
    """
    rQ = real_ring(q8.group)
    one_Q = rQ.trivial()
    Hq = restrict_real(H, q8, rQ)
    Haq = restrict_real(H_ad, q8, rQ)
    span = [one_Q, Haq, Hq]
    vals, prov = [], []
    for k in range(len(ring)):
        R = ring.basis(k)
        Rq = restrict_real(R, q8, rQ)
        sol = _solve_small(span, Rq)
        if sol is None:
            raise IncompleteTable(f"{ring.names[k]} restricted to Q8 leaves the seeded span")
        a, b, c = sol
        vals.append((b * seed_Had + c * seed_H) % 8)
        prov.append("paper-seeded" if R in (H, H_ad - ring.trivial()) else "computed")
    table = LambdaTable(ring, 8, "lambda(H)", vals, prov,
                        seeds=[("lambda(H)", seed_H), ("lambda(H_ad)", seed_Had)])
    for k in range(len(ring)):
        R = ring.basis(k)
        try:
            det4 = lambda_on_detector(R, ci)
        except NotSpinnable:
            continue
        table.checks.append((ring.names[k], vals[k], det4, 4))
    for name, W in (("H", H), ("H_ad", H_ad)):
        table.checks.append((name, lambda_on_group(table, W), lambda_on_detector(W, ci), 4))
    return table


def _solve_small(span, target):
    """Integer a with sum a_i span_i = target, by exhaustive search over small ranges."""
    import itertools
    bound = max(abs(c) for c in target.coeffs) + 2
    rng = range(-bound, bound + 1)
    for coeffs in itertools.product(rng, repeat=len(span)):
        acc = target.ring.zero()
        for a, v in zip(coeffs, span):
            if a:
                acc = acc + a * v
        if acc == target:
            return coeffs
    return None


def table_consistent(table: LambdaTable) -> bool:
    return all((v - d) % m == 0 for _, v, d, m in table.checks)


# -- Chern character ---------------------------------------------------------------------------

def chern_character_k(W, k: int, g: int) -> int:
    """ch_k on the detector C_p = <g> as a residue mod p times z0^k.

    For a complex character: s_k(c_1..c_k)/k!.  For a real class: half of ch_k of the
    complexification, which is ch_k of any complex form for even k and 0 for odd k.
    """
    chi = W.character if isinstance(W, RealRepClass) else W
    p = chi.G.element_orders[g]
    if k < 1 or k >= p:
        raise IndexOutOfRange("ch_k is integral mod p only for 1 <= k < p")
    spec = W.spectrum(g)
    lines = [s for s, m in enumerate(spec) for _ in range(m)]
    if any(m < 0 for m in spec):
        # virtual: split into genuine parts
        pos = [s for s, m in enumerate(spec) for _ in range(max(m, 0))]
        neg = [s for s, m in enumerate(spec) for _ in range(max(-m, 0))]
        val = (_ch_lines(pos, k, p) - _ch_lines(neg, k, p)) % p
    else:
        val = _ch_lines(lines, k, p)
    if isinstance(W, RealRepClass):
        val = val * pow(2, -1, p) % p
    return val


def _ch_lines(lines, k: int, p: int) -> int:
    ch = chern_on_cyclic(lines, p)
    s = newton_eval(k, [ch.c(i) for i in range(1, k + 1)], p)
    return s * pow(factorial(k), -1, p) % p


# -- Stiefel-Whitney classes on Q8 -----------------------------------------------------------

def q8_w1_of_line(chi: Character, i: int, j: int) -> Q8Model:
    """w1 of a real line: a, b are dual to i, j."""
    a, b = Q8Model.gen("a"), Q8Model.gen("b")
    out = Q8Model()
    if chi(i).to_int() == -1:
        out = out + a
    if chi(j).to_int() == -1:
        out = out + b
    return out


def total_sw(W: RealRepClass, i: int, j: int) -> Q8Model:
    """Total Stiefel-Whitney class of a genuine real rep of Q8 (generators i, j).

    Lines contribute 1 + w1; the 4-dimensional irreducible is the realification of
    the 2-dimensional complex one, with c1 = 0 and c2 reducing to P.
    """
    G = W.ring.G
    if G.order != 8 or G.is_abelian:
        raise NoDecomposition("total_sw is modelled on Q8 only")
    if not W.is_genuine():
        raise NoDecomposition("virtual class")
    out = Q8Model.one()
    for c, R in zip(W.coeffs, W.ring.irreps):
        if not c:
            continue
        if R.dim == 1:
            f = Q8Model.one() + q8_w1_of_line(R.character, i, j)
        elif R.kind == "quaternionic" and R.dim == 4:
            f = Q8Model.one() + Q8Model.gen("P")
        else:
            raise NoDecomposition("unexpected real irreducible")
        for _ in range(c):
            out = out * f
    return out


# -- Wu congruence ------------------------------------------------------------------------------

@dataclass(frozen=True)
class WuReport:
    p: int
    n: int
    r: int
    ok: bool
    reduced: MPoly           # q_n modulo (e_1..e_{rn-1}), in e-variables
    target: MPoly


def wu_congruence_check(p: int, n: int) -> WuReport:
    """q_n = (-1)^{n(r+1)} r e_{rn} mod (e_1, ..., e_{rn-1}) over F_p, r = (p-1)/2."""
    if p % 2 == 0 or n < 1:
        raise ValueError("p must be odd and n >= 1")
    r = (p - 1) // 2
    m = r * n
    if m > 8:
        raise TooManyVariables(f"rn = {m} exceeds 8")
    # q_n = e_n(t_1^r, ..., t_m^r): the degree-rn part of prod(1 + t_i^r)
    ts = [MPoly.var(m, i, p) for i in range(m)]
    powered = [t ** r for t in ts]
    qn = elementary(m, n, p).substitute(powered)
    if not isinstance(qn, MPoly):
        qn = MPoly.const(m, qn, p)
    in_e = sym_to_elementary(qn)
    zero_lower = {mono: c for mono, c in in_e.terms.items() if not any(mono[:m - 1])}
    reduced = MPoly(m, zero_lower, p)
    e_top = [0] * m
    e_top[m - 1] = 1
    target = MPoly(m, {tuple(e_top): (-1) ** (n * (r + 1)) * r}, p)
    return WuReport(p, n, r, reduced == target, reduced, target)
