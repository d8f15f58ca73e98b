"""Finite groups as explicit multiplication tables.

Elements are the integers ``0..order-1``; ``mul[a][b]`` is the index of ``a*b``.
Every constructor audits the group axioms exhaustively (order <= 512).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from math import gcd
from typing import Callable, Hashable, Sequence

import numpy as np

AUDIT_LIMIT = 512


class GroupAxiomError(ValueError):
    pass


class NotHomomorphism(ValueError):
    pass


class NotAutomorphism(ValueError):
    pass


class NotSubgroup(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table, generators: dict[str, int], names: Sequence[str] | None = None,
                 identity: int = 0, label: str = "", audit: bool = True):
        T = np.asarray(table, dtype=np.int64)
        n = T.shape[0]
        if T.shape != (n, n):
            raise GroupAxiomError("table must be square")
        self.order = n
        self.T = T
        self.mul = T.tolist()
        self.identity = identity
        self.generators = dict(generators)
        self.names = list(names) if names is not None else [f"e{i}" for i in range(n)]
        self.label = label
        if audit:
            self._audit()
        self.inv = [self.mul[a].index(identity) for a in range(n)]

    # -- construction helpers -------------------------------------------------
    def _audit(self):
        n, T, e = self.order, self.T, self.identity
        if n > AUDIT_LIMIT:
            raise GroupAxiomError(f"order {n} exceeds audit limit {AUDIT_LIMIT}")
        idx = np.arange(n)
        if not (np.array_equal(T[e], idx) and np.array_equal(T[:, e], idx)):
            raise GroupAxiomError("identity axiom fails")
        for a in range(n):
            if len(set(self.mul[a])) != n:
                raise GroupAxiomError("table row is not a permutation")
            if not np.array_equal(T[T[a]], T[a][T]):
                raise GroupAxiomError(f"associativity fails for a={a}")
        if not np.all(np.sort(T, axis=0) == idx[:, None]):
            raise GroupAxiomError("table column is not a permutation")
        if len(self.closure(self.generators.values())) != n:
            raise GroupAxiomError("generators do not generate the group")

    @classmethod
    def from_closure(cls, gens: dict[str, Hashable], op: Callable, identity: Hashable,
                     namer: Callable[[Hashable], str] = str, label: str = ""):
        """Group generated by hashable objects under ``op``; returns (group, elements)."""
        elems = [identity]
        index = {identity: 0}
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in gens.values():
                y = op(x, g)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    queue.append(y)
                    if len(elems) > AUDIT_LIMIT:
                        raise GroupAxiomError("closure exceeds audit limit")
        n = len(elems)
        table = [[index[op(a, b)] for b in elems] for a in elems]
        G = cls(table, {k: index[v] for k, v in gens.items()},
                [namer(x) for x in elems], 0, label)
        return G, elems

    # -- basic queries -------------------------------------------------------
    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def m(self, *xs: int) -> int:
        return reduce(lambda a, b: self.mul[a][b], xs, self.identity)

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        r = self.identity
        b = g
        while k:
            if k & 1:
                r = self.mul[r][b]
            b = self.mul[b][b]
            k >>= 1
        return r

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    @cached_property
    def element_orders(self) -> list[int]:
        out = []
        for g in range(self.order):
            k, x = 1, g
            while x != self.identity:
                x = self.mul[x][g]
                k += 1
            out.append(k)
        return out

    def element_order(self, g: int) -> int:
        return self.element_orders[g]

    @cached_property
    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.element_orders, 1)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.T, self.T.T))

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def closure(self, gens) -> frozenset[int]:
        seen = {self.identity}
        queue = deque([self.identity])
        gens = list(gens)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def is_subgroup_set(self, elems) -> bool:
        S = set(elems)
        return (self.identity in S and all(self.mul[a][b] in S for a in S for b in S))

    # -- conjugacy -----------------------------------------------------------
    @cached_property
    def classes(self) -> list["ConjClass"]:
        seen = [False] * self.order
        out = []
        order = [self.identity] + [x for x in range(self.order) if x != self.identity]
        for x in order:
            if seen[x]:
                continue
            cl = sorted({self.conj(g, x) for g in range(self.order)})
            for y in cl:
                seen[y] = True
            out.append(ConjClass(rep=x, elements=tuple(cl)))
        return out

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * self.order
        for i, c in enumerate(self.classes):
            for x in c.elements:
                out[x] = i
        return out

    def subgroup(self, elems=None, gens=None, label: str = "") -> "Subgroup":
        if gens is not None:
            elems = self.closure(gens)
        elems = sorted(set(elems))
        if not self.is_subgroup_set(elems):
            raise NotSubgroup("set is not closed under multiplication")
        pos = {g: i for i, g in enumerate(elems)}
        table = [[pos[self.mul[a][b]] for b in elems] for a in elems]
        if gens is None:
            gens = _small_generating_set(self, elems)
        H = FiniteGroup(table, {f"s{i}": pos[g] for i, g in enumerate(gens)},
                        [self.names[g] for g in elems], pos[self.identity], label)
        return Subgroup(parent=self, group=H, embedding=tuple(elems))

    def cyclic_subgroup(self, g: int) -> "Subgroup":
        elems = [self.identity]
        x = g
        while x != self.identity:
            elems.append(x)
            x = self.mul[x][g]
        # keep power order so that H-index k is g^k
        pos = {h: i for i, h in enumerate(elems)}
        table = [[pos[self.mul[a][b]] for b in elems] for a in elems]
        H = FiniteGroup(table, {"g": 1 % len(elems)}, [self.names[h] for h in elems], 0,
                        f"<{self.names[g]}>")
        return Subgroup(parent=self, group=H, embedding=tuple(elems))

    def cyclic_subgroups(self) -> list[frozenset[int]]:
        out = set()
        for g in range(self.order):
            out.add(self.closure([g]))
        return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class ConjClass:
    rep: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup H <= G with its own table; ``embedding[h]`` is the G-index."""
    parent: FiniteGroup
    group: FiniteGroup
    embedding: tuple[int, ...]

    @property
    def order(self):
        return self.group.order

    @property
    def index(self):
        return self.parent.order // self.group.order

    @cached_property
    def elements(self) -> frozenset[int]:
        return frozenset(self.embedding)


def _small_generating_set(G: FiniteGroup, elems) -> list[int]:
    gens: list[int] = []
    cur = frozenset([G.identity])
    for g in sorted(elems, key=lambda x: (-G.element_orders[x], x)):
        if g not in cur:
            gens.append(g)
            cur = G.closure(gens)
            if len(cur) == len(elems):
                break
    return gens or [G.identity]


# -- constructors ---------------------------------------------------------------

def make_cyclic(k: int, gen: str = "g") -> FiniteGroup:
    if k < 1:
        raise ValueError("k must be positive")
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    names = ["1"] + [gen if i == 1 else f"{gen}^{i}" for i in range(1, k)]
    return FiniteGroup(table, {gen: 1 % k}, names, 0, f"C{k}")


def direct_product(G: FiniteGroup, H: FiniteGroup, label: str = "") -> FiniteGroup:
    n, m = G.order, H.order
    table = [[G.mul[a // m][b // m] * m + H.mul[a % m][b % m] for b in range(n * m)]
             for a in range(n * m)]
    clash = set(G.generators) & set(H.generators)
    gens = {(k + "1" if k in clash else k): v * m + H.identity for k, v in G.generators.items()}
    gens.update({(k + "2" if k in clash else k): G.identity * m + v
                 for k, v in H.generators.items()})
    names = [f"({G.names[a // m]},{H.names[a % m]})" for a in range(n * m)]
    return FiniteGroup(table, gens, names, G.identity * m + H.identity,
                       label or f"{G.label}x{H.label}")


def _is_automorphism(N: FiniteGroup, perm) -> bool:
    if sorted(perm) != list(range(N.order)):
        return False
    return all(perm[N.mul[a][b]] == N.mul[perm[a]][perm[b]]
               for a in range(N.order) for b in range(N.order))


def extend_action(H: FiniteGroup, gen_images: dict[str, list[int]], degree: int):
    """Extend generator images (permutations) to a homomorphism H -> Sym(degree)."""
    ident = list(range(degree))
    phi: dict[int, list[int]] = {H.identity: ident}
    queue = deque([H.identity])
    gens = [(H.generators[name], img) for name, img in gen_images.items()]
    if set(gen_images) != set(H.generators):
        raise NotHomomorphism("action must give an image for every generator of H")
    while queue:
        h = queue.popleft()
        for s, img in gens:
            hs = H.mul[h][s]
            comp = [phi[h][img[x]] for x in range(degree)]
            if hs in phi:
                if phi[hs] != comp:
                    raise NotHomomorphism("action is not well defined on H")
            else:
                phi[hs] = comp
                queue.append(hs)
    return [phi[h] for h in range(H.order)]


def make_semidirect(N: FiniteGroup, H: FiniteGroup, action, label: str = "",
                    name_fmt: Callable[[str, str], str] | None = None) -> FiniteGroup:
    """N x| H with (n1,h1)(n2,h2) = (n1 * phi(h1)(n2), h1 h2).

    ``action`` maps each generator name of H to an automorphism of N, given
    as a permutation list, or is a callable ``h -> permutation`` on all of H.
    Element (n, h) gets index ``n * |H| + h``.
    """
    if callable(action):
        phi = [list(action(h)) for h in range(H.order)]
        for h1, h2 in product(range(H.order), repeat=2):
            lhs = phi[H.mul[h1][h2]]
            rhs = [phi[h1][phi[h2][x]] for x in range(N.order)]
            if lhs != rhs:
                raise NotHomomorphism(f"phi(h1 h2) != phi(h1) phi(h2) at {(h1, h2)}")
    else:
        for name, img in action.items():
            if not _is_automorphism(N, img):
                raise NotAutomorphism(f"image of {name} is not an automorphism of N")
        phi = extend_action(H, action, N.order)
    for h in range(H.order):
        if not _is_automorphism(N, phi[h]):
            raise NotAutomorphism(f"phi({H.names[h]}) is not an automorphism")
    n, m = N.order, H.order
    table = [[0] * (n * m) for _ in range(n * m)]
    for a in range(n * m):
        n1, h1 = divmod(a, m)
        ph = phi[h1]
        row = table[a]
        for b in range(n * m):
            n2, h2 = divmod(b, m)
            row[b] = N.mul[n1][ph[n2]] * m + H.mul[h1][h2]
    gens = {k: v * m + H.identity for k, v in N.generators.items()}
    gens.update({k: N.identity * m + v for k, v in H.generators.items()})
    fmt = name_fmt or (lambda a, b: a if b == "1" else (b if a == "1" else f"{a}{b}"))
    names = [fmt(N.names[a // m], H.names[a % m]) for a in range(n * m)]
    return FiniteGroup(table, gens, names, N.identity * m + H.identity,
                       label or f"{N.label}:{H.label}")


# Quaternion units as (sign, axis) with axis in 1, i, j, k.
_QMUL = {  # axis product: (sign, axis)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def make_quaternion() -> FiniteGroup:
    """Q8 = {+-1, +-i, +-j, +-k} with generators i, j."""
    elems = [(s, a) for a in "1ijk" for s in (1, -1)]
    idx = {e: t for t, e in enumerate(elems)}

    def mul(x, y):
        s, a = _QMUL[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    table = [[idx[mul(x, y)] for y in elems] for x in elems]
    names = [("" if s > 0 else "-") + a for s, a in elems]
    return FiniteGroup(table, {"i": idx[(1, "i")], "j": idx[(1, "j")]}, names, 0, "Q8")


def make_metacyclic(p: int, m: int, e: int, zeta: str = "z", tau: str = "t",
                    label: str = "") -> FiniteGroup:
    """C_p x| C_m with tau zeta tau^{-1} = zeta^e; elements named zeta^a tau^j."""
    if pow(e, m, p) != 1 % p:
        raise NotHomomorphism(f"e={e} does not have order dividing {m} mod {p}")
    N = make_cyclic(p, zeta)
    H = make_cyclic(m, tau)
    return make_semidirect(N, H, {tau: [(a * e) % p for a in range(p)]},
                           label or f"C{p}:C{m}")


def make_g12() -> FiniteGroup:
    """C3 x| C4 with the generator of C4 inverting C3."""
    return make_metacyclic(3, 4, 2, "s", "x", "G12")


def make_g24() -> FiniteGroup:
    """Q8 x| C3 with C3 cycling i -> j -> k."""
    Q = make_quaternion()
    C = make_cyclic(3, "w")
    nm = Q.names
    img = {}
    cyc = {"1": "1", "i": "j", "j": "k", "k": "i"}
    for t, name in enumerate(nm):
        sign = "-" if name.startswith("-") else ""
        img[t] = nm.index(sign + cyc[name.lstrip("-")])
    return make_semidirect(Q, C, {"w": [img[t] for t in range(8)]}, "G24")


# -- isomorphism ----------------------------------------------------------------

def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """Search for an isomorphism G -> H by images of G's named generators."""
    if G.order != H.order or sorted(G.element_orders) != sorted(H.element_orders):
        return None
    gens = list(G.generators.values())
    cands = [[h for h in range(H.order) if H.element_orders[h] == G.element_orders[g]]
             for g in gens]
    for imgs in product(*cands):
        phi = {G.identity: H.identity}
        queue = deque([G.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for g, im in zip(gens, imgs):
                y = G.mul[x][g]
                v = H.mul[phi[x]][im]
                if y in phi:
                    if phi[y] != v:
                        ok = False
                        break
                else:
                    phi[y] = v
                    queue.append(y)
        if ok and len(set(phi.values())) == G.order:
            return [phi[x] for x in range(G.order)]
    return None


def center(G: FiniteGroup) -> frozenset[int]:
    return frozenset(z for z in range(G.order)
                     if all(G.mul[z][g] == G.mul[g][z] for g in range(G.order)))


def conjugacy_classes(G: FiniteGroup) -> list[ConjClass]:
    return G.classes
