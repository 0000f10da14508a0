"""Brute-force reference implementations.

Everything here works on plain ``frozenset``s of ``Permutation`` objects and
translates each definition quantifier by quantifier, with no product tables,
coset tricks or caching. Only meant for small groups; used as test oracles.
"""

from __future__ import annotations

from itertools import combinations

from .perm import FiniteGroup, Permutation, compose, conjugate, inverse

Elems = frozenset


def closure(seed, degree: int) -> frozenset:
    """Smallest set containing ``seed`` and the identity, closed under products."""
    seed = list(seed)
    out = {Permutation.identity(degree)}
    frontier = list(out)
    while frontier:
        new = {compose(a, s) for a in frontier for s in seed} - out
        out |= new
        frontier = list(new)
    return frozenset(out)


def conj_set(H, g) -> frozenset:
    return frozenset(conjugate(h, g) for h in H)


def normalizer(G, H) -> frozenset:
    return frozenset(g for g in G if conj_set(H, g) == H)


def centralizer(G, H) -> frozenset:
    return frozenset(g for g in G if all(compose(g, h) == compose(h, g) for h in H))


def normal_closure(G, H, degree: int) -> frozenset:
    return closure({conjugate(h, g) for h in H for g in G}, degree)


def is_normal(G, H) -> bool:
    return all(conj_set(H, g) == H for g in G)


def is_subnormal(G, H, degree: int) -> bool:
    K = frozenset(G)
    while True:
        nxt = normal_closure(K, H, degree)
        if nxt == K:
            return K == H
        K = nxt


def subgroups(G: FiniteGroup) -> list[frozenset]:
    """Closures of all k-subsets for k = 0, 1, 2, ... until a round adds nothing.

    Complete: if no new subgroup needs k+1 generators, then none needs more.
    """
    els = list(G.elements)
    found = {closure((), G.degree)}
    k = 1
    while True:
        before = len(found)
        for combo in combinations(els, k):
            found.add(closure(combo, G.degree))
        if len(found) == before:
            return sorted(found, key=lambda S: (len(S), sorted(S)))
        k += 1


def center_series(G) -> list[frozenset]:
    """Upper central series using every element (not just generators)."""
    G = frozenset(G)
    ident = next(g for g in G if g.is_identity())
    terms = [frozenset({ident})]
    while True:
        Z = terms[-1]
        nxt = frozenset(x for x in G
                        if all(compose(compose(inverse(x), inverse(g)), compose(x, g)) in Z
                               for g in G))
        if nxt == Z:
            return terms
        terms.append(nxt)


def is_self_normalizing(G, H) -> bool:
    return normalizer(G, H) == H


def is_self_centralizing(G, H) -> bool:
    return centralizer(G, H) <= H


def is_pronormal(G, H, degree: int) -> bool:
    for g in G:
        Hg = conj_set(H, g)
        L = closure(H | Hg, degree)
        if not any(conj_set(H, x) == Hg for x in L):
            return False
    return True


def is_h_subgroup(G, H) -> bool:
    N = normalizer(G, H)
    return all(N & conj_set(H, g) <= H for g in G)


def is_weakly_normal(G, H) -> bool:
    N = normalizer(G, H)
    return all(g in N for g in G if conj_set(H, g) <= N)


def is_ne_subgroup(G, H, degree: int) -> bool:
    return normalizer(G, H) & normal_closure(G, H, degree) == H


def satisfies_subnormalizer_condition(G, H, lattice) -> bool:
    NH = normalizer(G, H)
    for K in lattice:
        if H <= K and is_normal(K, H) and not normalizer(G, K) <= NH:
            return False
    return True


class NaiveOracle:
    """Bundles the brute-force predicates for one group (lattice computed once)."""

    def __init__(self, G: FiniteGroup):
        self.group = G
        self.elements = frozenset(G.elements)
        self.degree = G.degree
        self._lattice = None

    @property
    def lattice(self) -> list[frozenset]:
        if self._lattice is None:
            self._lattice = subgroups(self.group)
        return self._lattice

    def predicate(self, name: str, H: frozenset) -> bool:
        G, d = self.elements, self.degree
        if name == "self_normalizing":
            return is_self_normalizing(G, H)
        if name == "self_centralizing":
            return is_self_centralizing(G, H)
        if name == "pronormal":
            return is_pronormal(G, H, d)
        if name == "h_subgroup":
            return is_h_subgroup(G, H)
        if name == "weakly_normal":
            return is_weakly_normal(G, H)
        if name == "ne_subgroup":
            return is_ne_subgroup(G, H, d)
        if name == "subnormalizer_condition":
            return satisfies_subnormalizer_condition(G, H, self.lattice)
        raise KeyError(name)

    def norm(self, members) -> frozenset:
        """Intersection of normalizers over ``members``; the whole group if empty."""
        out = self.elements
        for H in members:
            out = out & normalizer(self.elements, H)
        return out
