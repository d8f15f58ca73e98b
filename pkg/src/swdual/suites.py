"""Verification suites shared by the CLI and the acceptance script.

Each suite returns a list of :class:`Check` records sorted by name.  Sampling
uses ``random.Random(SEED)`` so repeated runs give identical reports.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

SEED = 20240611


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: object = None
    detail: str = ""


@dataclass
class Config:
    """Size caps and precisions; overridable from the command line only."""
    precision: int = 6
    max_degree: int = 4
    samples: int = 100
    lattice_instances: int = 200
    honda_primes: tuple[int, ...] = (3, 5, 7)
    wu_grid: tuple[tuple[int, int], ...] = ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2))
    extra: dict = field(default_factory=dict)


# -- units -----------------------------------------------------------------------------------

def suite_units(cfg: Config) -> list[Check]:
    from .groups import find_isomorphism, make_g12, make_g24, make_quaternion
    from .orders import finite_units, order_hurwitz, order_lipschitz, order_p3
    out = []
    for tag, O, H in (("p3", order_p3(), make_g12()), ("hurwitz", order_hurwitz(), make_g24()),
                      ("lipschitz", order_lipschitz(), make_quaternion())):
        U = finite_units(O)
        out.append(Check(f"units.{tag}.count", U.group.order == H.order, U.group.order))
        out.append(Check(f"units.{tag}.isomorphism", find_isomorphism(H, U.group) is not None,
                         H.label))
    return sorted(out, key=lambda c: c.name)


# -- cohomology -------------------------------------------------------------------------------

def restriction_cyclic(p: int, j: int, maxdeg: int = 3) -> dict[int, bool]:
    """Degree -> whether res: H^k(C_{p^j}) -> H^k(C_{p^{j-1}}) is zero."""
    from .cohomology import bar_cohomology, restriction
    from .groups import make_cyclic
    G = make_cyclic(p**j)
    sub = G.subgroup(gens=[p])
    cG = bar_cohomology(G, p, maxdeg)
    cH = bar_cohomology(sub.group, p, maxdeg)
    return {k: all(restriction(cG, cH, sub, x).is_zero() for x in cG.gens(k))
            for k in range(1, maxdeg + 1)}


def _inclusions():
    from .groups import make_cyclic, make_g12, make_quaternion
    C9 = make_cyclic(9)
    G12 = make_g12()
    Q8 = make_quaternion()
    return [
        ("C3<C9", 3, C9.subgroup(gens=[3]), 3),
        ("C3<G12", 3, G12.subgroup(gens=[G12.generators["s"]]), 3),
        ("C4<Q8", 2, Q8.subgroup(gens=[Q8.names.index("i")]), 3),
    ]


def frobenius_and_index(samples: int, seed: int = SEED):
    """tr(x res y) = tr(x) y and tr res = index on the three inclusions."""
    from .cohomology import CohClass, bar_cohomology, cup, restriction, transfer
    rng = random.Random(seed)
    out = {}
    for tag, p, sub, maxdeg in _inclusions():
        cG = bar_cohomology(sub.parent, p, maxdeg)
        cH = bar_cohomology(sub.group, p, maxdeg)
        idx_ok = True
        for k in range(1, maxdeg + 1):
            for x in cG.gens(k):
                if transfer(cH, cG, sub, restriction(cG, cH, sub, x)) != x.scale(sub.index):
                    idx_ok = False
        degs = [(a, b) for a in range(maxdeg + 1) for b in range(maxdeg + 1 - a)
                if cH.dim(a) and cG.dim(b)]
        good = 0
        for _ in range(samples):
            a, b = rng.choice(degs)
            x = CohClass(cH, a, tuple(rng.randrange(p) for _ in range(cH.dim(a))))
            y = CohClass(cG, b, tuple(rng.randrange(p) for _ in range(cG.dim(b))))
            lhs = transfer(cH, cG, sub, cup(x, restriction(cG, cH, sub, y)))
            rhs = cup(transfer(cH, cG, sub, x), y)
            good += lhs == rhs
        out[tag] = (idx_ok, good)
    return out


def suite_cohomology(cfg: Config) -> list[Check]:
    from .cohomology import Q8Model, bar_cohomology, lambda_tensor_poly_dims
    from .groups import direct_product, make_cyclic, make_quaternion
    out = []
    d = bar_cohomology(make_quaternion(), 2, 4).dims()
    out.append(Check("cohomology.q8.dims", d == (1, 2, 2, 1, 1) == Q8Model.graded_dims(4), d))
    E = direct_product(make_cyclic(3), make_cyclic(3))
    d = bar_cohomology(E, 3, 3).dims()
    out.append(Check("cohomology.c3xc3.dims", d == lambda_tensor_poly_dims(2, 2, 3), d))
    zero = restriction_cyclic(3, 2)
    # the integral class of degree 2 restricts to a generator; odd degrees die
    out.append(Check("cohomology.res_C3<C9.odd_degrees_zero", zero[1] and zero[3], zero))
    out.append(Check("cohomology.res_C3<C9.degree2_nonzero", not zero[2], zero))
    for tag, (idx_ok, good) in frobenius_and_index(cfg.samples).items():
        out.append(Check(f"cohomology.transfer_restriction.{tag}", idx_ok))
        out.append(Check(f"cohomology.frobenius.{tag}", good == cfg.samples, good))
    return sorted(out, key=lambda c: c.name)


# -- Wu ---------------------------------------------------------------------------------------

def suite_wu(cfg: Config) -> list[Check]:
    from .charclasses import wu_congruence_check
    out = []
    for p, n in cfg.wu_grid:
        r = wu_congruence_check(p, n)
        out.append(Check(f"wu.p{p}n{n}", r.ok, repr(r.reduced)))
    return sorted(out, key=lambda c: c.name)


# -- representations --------------------------------------------------------------------------

def suite_reps(cfg: Config) -> list[Check]:
    from .groups import make_g12, make_g24, make_metacyclic, make_quaternion
    from .orders import finite_units, order_lipschitz
    from .reps import (character_table, order_conjugation_rep, order_left_rep, real_ring,
                       regular_decomposition, restrict_real)
    from .shift import build_case
    out = []
    for G in (make_quaternion(), make_g12(), make_g24(), make_metacyclic(5, 16, 2)):
        t = character_table(G)
        ok = t.orthogonality_ok() and t.column_orthogonality_ok()
        ok = ok and sum(x.degree ** 2 for x in t.irreducibles) == G.order
        out.append(Check(f"reps.orthogonality.{G.label}", ok,
                         [x.degree for x in t.irreducibles]))
    dims = sorted(x.degree for x in character_table(make_g24()).irreducibles)
    out.append(Check("reps.g24.dims", dims == [1, 1, 1, 2, 2, 2, 3], dims))

    U = finite_units(order_lipschitz())
    ring = real_ring(U.group)
    H_ad = order_conjugation_rep(U).real_class
    H = order_left_rep(U).real_class
    out.append(Check("reps.q8.regular=H_ad+H", H_ad + H == ring.regular(), repr(H_ad + H)))
    lines = [R for R in ring.irreps if R.dim == 1]
    target = ring.zero()
    for R in lines:
        target = target + ring.basis(R.index)
    out.append(Check("reps.q8.H_ad=1+chi_i+chi_j+chi_k", H_ad == target and len(lines) == 4,
                     repr(H_ad)))
    quat = [R.kind for R in ring.irreps if R.dim == 4]
    out.append(Check("reps.q8.H_quaternionic", quat == ["quaternionic"], quat))

    for p in cfg.honda_primes:
        n = p - 1
        C = build_case("honda", p, cfg.precision)
        G = C.G
        Cp = G.subgroup([a * n * n for a in range(p)])
        rH = real_ring(Cp.group)
        res = restrict_real(C.V, Cp, rH)
        out.append(Check(f"reps.honda.p{p}.res_Cp_V", res == rH.trivial() + (n - 1) * rH.regular(),
                         repr(res)))
        D = regular_decomposition(G, p, n * n)
        expected = 2 + (n * n - 2) // 2 + n // 2
        out.append(Check(f"reps.honda.p{p}.regular_identity", D.ok and D.count == expected,
                         D.count))
    return sorted(out, key=lambda c: c.name)


# -- lattices ---------------------------------------------------------------------------------

def _random_lattice(rng: random.Random, d: int, p: int):
    from .exact.intmat import det
    from .lattices import Lattice
    while True:
        B = [[rng.randint(-4, 4) for _ in range(d)] for _ in range(d)]
        for i in range(d):
            if rng.random() < 0.5:
                B[i] = [p * x for x in B[i]]
        if det(B):
            return Lattice(B)


def lattice_properties(instances: int, seed: int = SEED) -> dict[str, int]:
    """Counts of instances satisfying idempotence, p-power index and stability transfer."""
    from .exact.intmat import det, matmul, rational_inverse
    from .lattices import check_stability, lattice_index, saturate_at_p
    rng = random.Random(seed)
    good = {"idempotent": 0, "p_power_index": 0, "stability": 0}
    for _ in range(instances):
        d = rng.randint(1, 5)
        p = rng.choice((2, 3, 5))
        L0 = _random_lattice(rng, d, p)
        L = saturate_at_p(L0, p)
        good["idempotent"] += saturate_at_p(L, p) == L
        idx = lattice_index(L0, L)
        while idx % p == 0:
            idx //= p
        good["p_power_index"] += idx == 1
        # A = B^T M adj(B^T) is integral and maps L0 into itself
        Bt = [list(r) for r in zip(*L0.basis)]
        D = det(Bt)
        M = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]
        A = [[int(x * D) for x in row] for row in matmul(matmul(Bt, M), rational_inverse(Bt))]
        good["stability"] += check_stability(L0, [A]) and check_stability(L, [A])
    return good


def suite_lattice(cfg: Config) -> list[Check]:
    from .exact.intmat import det
    from .lattices import Lattice, check_stability, standard_lattice
    from .morava import hensel_zeta_tau, make_truncated_On
    from .orders import (conj_action_matrix, finite_units, order_hurwitz, order_p3,
                         order_p3_E0, sublattice_rows)
    from .reps import honda_lattice_in_On, honda_lattice_matrices
    out = []
    N = cfg.lattice_instances
    for k, v in lattice_properties(N).items():
        out.append(Check(f"lattice.random.{k}", v == N, f"{v}/{N}"))
    for tag, O in (("p2", order_hurwitz()), ("p3", order_p3())):
        U = finite_units(O)
        mats = [conj_action_matrix(O, u) for u in U.elements]
        L = standard_lattice(O.d)
        out.append(Check(f"lattice.E.{tag}.stable", check_stability(L, mats) and L.det != 0,
                         len(mats)))
    O = order_p3()
    U = finite_units(O)
    E0 = Lattice(sublattice_rows(O, order_p3_E0()))
    mats = [conj_action_matrix(O, u) for u in U.elements]
    out.append(Check("lattice.E0.p3.not_stable", not check_stability(E0, mats), E0.det))
    for p in (3, 5):
        R = make_truncated_On(p, p - 1, cfg.precision)
        zt = hensel_zeta_tau(R)
        hc = honda_lattice_in_On(R, zt)
        Mz, Mt = honda_lattice_matrices(p, zt.e)
        L = standard_lattice((p - 1) ** 2)
        ok = hc.ok and check_stability(L, [Mz, Mt]) and det(Mz) == 1 and det(Mt) == 1
        out.append(Check(f"lattice.honda.p{p}", ok,
                         {"det_valuation": hc.det_valuation, "stable": hc.stable}))
    return sorted(out, key=lambda c: c.name)


# -- Morava order arithmetic ---------------------------------------------------------------

def suite_order(cfg: Config) -> list[Check]:
    from .exact.intmat import det
    from .morava import (element_order, exp_identity_check, hensel_zeta_tau, is_primitive_root,
                         lower_p_series_data, make_truncated_On)
    from .orders import conj_action_matrix, finite_units, order_hurwitz, order_p3
    from .reps import honda_conjugation_rep
    out = []
    for p in (3, 5):
        n = p - 1
        R = make_truncated_On(p, n, cfg.precision)
        zt = hensel_zeta_tau(R)
        oz = element_order(R, zt.zeta, p)
        ot = element_order(R, zt.tau, n * n)
        out.append(Check(f"order.p{p}.zeta_order", oz == p, oz))
        out.append(Check(f"order.p{p}.tau_order", ot == n * n, ot))
        conj = R.mul(R.mul(zt.tau, zt.zeta), R.inverse(zt.tau))
        out.append(Check(f"order.p{p}.tau_zeta_tau^-1=zeta^e",
                         conj == R.pow(zt.zeta, zt.e) and is_primitive_root(zt.e, p), zt.e))
        rep = exp_identity_check(R, 1, cfg.samples)
        out.append(Check(f"order.p{p}.exp", rep.ok, f"{rep.passed}/{rep.samples}"))
        mats = honda_conjugation_rep(p, zt.e).matrices
        out.append(Check(f"order.p{p}.det_conjugation", all(det(M) == 1 for M in mats), len(mats)))
    R = make_truncated_On(3, 2, cfg.precision)
    q = lower_p_series_data(R, 1, 2)
    out.append(Check("order.p3.gamma1/gamma2", q.invariants == (3,) * 4, q.invariants))
    for tag, O in (("p2", order_hurwitz()), ("p3", order_p3())):
        U = finite_units(O)
        ok = all(det(conj_action_matrix(O, u)) == 1 for u in U.elements)
        out.append(Check(f"order.E.{tag}.det_conjugation", ok, len(U.elements)))
    return sorted(out, key=lambda c: c.name)


SUITES = {
    "cohomology": suite_cohomology,
    "lattice": suite_lattice,
    "order": suite_order,
    "reps": suite_reps,
    "units": suite_units,
    "wu": suite_wu,
}


def run_suite(name: str, cfg: Config | None = None) -> list[Check]:
    cfg = cfg or Config()
    if name == "all":
        out = []
        for k in sorted(SUITES):
            out += SUITES[k](cfg)
        return sorted(out, key=lambda c: c.name)
    return SUITES[name](cfg)
