"""Subgroups of an enumerated group and the standard constructions on them.

Every function that takes a group argument ``G`` accepts either a
``FiniteGroup`` or a ``Subgroup``; in the latter case the subgroup plays the
role of the surrounding group (needed e.g. for ``N_M(H)`` with ``M < G``).
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .perm import FiniteGroup, GroupError, Permutation

DEFAULT_MAX_LATTICE = 400
MAX_LATTICE_ENV = "OMEGA_NORM_MAX_LATTICE"


class LatticeCapExceeded(GroupError):
    """Full subgroup enumeration was requested for a group above the cap."""


_cap_override: ContextVar[int | None] = ContextVar("lattice_cap_override", default=None)


@contextmanager
def lattice_cap_scope(max_lattice: int | None):
    """Make ``max_lattice`` the default cap for nested calls (None leaves it alone)."""
    if max_lattice is None:
        yield
        return
    token = _cap_override.set(int(max_lattice))
    try:
        yield
    finally:
        _cap_override.reset(token)


def lattice_cap(max_lattice: int | None = None) -> int:
    """Resolve the lattice cap.

    Order: explicit argument, an enclosing ``lattice_cap_scope``, the
    environment variable, the default.
    """
    if max_lattice is not None:
        return int(max_lattice)
    scoped = _cap_override.get()
    if scoped is not None:
        return scoped
    env = os.environ.get(MAX_LATTICE_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise GroupError(f"{MAX_LATTICE_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_LATTICE


def _mask_of(n: int, indices: Iterable[int]) -> int:
    flags = np.zeros(n, dtype=bool)
    flags[list(indices)] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _indices_of(n: int, mask: int) -> tuple[int, ...]:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:n]
    return tuple(np.flatnonzero(bits).tolist())


class Subgroup:
    """An interned subgroup of ``ambient``, identified by its element bitmask.

    Do not construct directly; use the functions of this module, which
    guarantee closure.
    """

    __slots__ = ("ambient", "mask", "members", "_gens")

    def __init__(self, ambient: FiniteGroup, mask: int, members: tuple[int, ...],
                 gens: tuple[int, ...] | None):
        self.ambient = ambient
        self.mask = mask
        self.members = members
        self._gens = gens

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        els = self.ambient.elements
        return tuple(els[i] for i in self.members)

    @property
    def gens(self) -> tuple[int, ...]:
        """A small generating set, as element indices."""
        if self._gens is None:
            self._gens = _greedy_generators(self)
        return self._gens

    @property
    def generators(self) -> list[Permutation]:
        els = self.ambient.elements
        return [els[i] for i in self.gens]

    def has(self, i: int) -> bool:
        return (self.mask >> i) & 1 == 1

    def __contains__(self, g) -> bool:
        if isinstance(g, Permutation):
            i = self.ambient.index.get(g.images)
            return i is not None and self.has(i)
        return self.has(g)

    def __le__(self, other: Subgroup) -> bool:
        _same_ambient(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: Subgroup) -> bool:
        return other <= self

    def __gt__(self, other: Subgroup) -> bool:
        return other < self

    def __and__(self, other: Subgroup) -> Subgroup:
        _same_ambient(self, other)
        return _from_mask(self.ambient, self.mask & other.mask)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.ambient is other.ambient and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return len(self.members) == self.ambient.order

    def sort_key(self):
        return (len(self.members), self.members)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<Subgroup of {self.ambient.name} order={self.order} gens=[{gens}]>"


GroupLike = Union[FiniteGroup, Subgroup]


def _same_ambient(a: Subgroup, b: Subgroup) -> None:
    if a.ambient is not b.ambient:
        raise GroupError("subgroups belong to different groups")


def _intern(G: FiniteGroup, mask: int, members=None, gens=None) -> Subgroup:
    with G._lock:
        sub = G._interned.get(mask)
        if sub is None:
            if members is None:
                members = _indices_of(G.order, mask)
            sub = Subgroup(G, mask, tuple(members), gens)
            G._interned[mask] = sub
        elif sub._gens is None and gens is not None:
            sub._gens = gens
        return sub


def _from_mask(G: FiniteGroup, mask: int) -> Subgroup:
    return _intern(G, mask)


def _from_members(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    members = sorted(set(members))
    return _intern(G, _mask_of(G.order, members), members)


def as_subgroup(G: GroupLike) -> Subgroup:
    if isinstance(G, Subgroup):
        return G
    return whole(G)


def ambient_of(G: GroupLike) -> FiniteGroup:
    return G.ambient if isinstance(G, Subgroup) else G


def whole(G: FiniteGroup) -> Subgroup:
    mask = (1 << G.order) - 1
    gens = tuple(dict.fromkeys(i for i in G.gen_indices if i != 0))
    return _intern(G, mask, range(G.order), gens)


def trivial(G: GroupLike) -> Subgroup:
    return _intern(ambient_of(G), 1, (0,), ())


def _extend(base: Subgroup, extra: Iterable[int]) -> Subgroup:
    """``<base, extra>`` by adding whole right cosets of ``base`` (Dimino)."""
    G = base.ambient
    new = []
    for x in extra:
        if not base.has(x) and x not in new:
            new.append(x)
    if not new:
        return base
    H = base.members
    gens = list(base.gens)
    inside = bytearray(G.order)
    for h in H:
        inside[h] = 1
    members = list(H)
    mul = G.mul
    t = G.table
    for x in new:
        if inside[x]:
            continue
        gens.append(x)
        reps = [0]
        k = 0
        # base may have grown: recompute cosets of the current members
        H = tuple(members)
        while k < len(reps):
            r = reps[k]
            k += 1
            for s in gens:
                e = mul(r, s)
                if inside[e]:
                    continue
                if t is not None:
                    coset = [t[h][e] for h in H]
                else:
                    coset = [mul(h, e) for h in H]
                for c in coset:
                    inside[c] = 1
                members.extend(coset)
                reps.append(e)
    members.sort()
    return _intern(G, _mask_of(G.order, members), members, tuple(gens))


def _greedy_generators(S: Subgroup) -> tuple[int, ...]:
    cur = trivial(S.ambient)
    gens: list[int] = []
    for i in S.members:
        if not cur.has(i):
            gens.append(i)
            cur = _extend(cur, [i])
            if cur.mask == S.mask:
                break
    return tuple(gens)


def _check_in(G: GroupLike, items: Iterable[int]) -> None:
    S = as_subgroup(G)
    for i in items:
        if not S.has(i):
            raise GroupError(f"element {S.ambient.elements[i]} is outside the group")


def _to_index(G: GroupLike, g) -> int:
    A = ambient_of(G)
    if isinstance(g, Permutation):
        return A.index_of(g)
    return int(g)


def subgroup_closure(G: GroupLike, seed: Iterable) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``seed`` (permutations or indices)."""
    idx = [_to_index(G, g) for g in seed]
    _check_in(G, idx)
    return _extend(trivial(G), idx)


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    """``<H, K>``."""
    _same_ambient(H, K)
    return _extend(H, K.gens)


def conjugate_subgroup(H: Subgroup, g) -> Subgroup:
    """``H^g = {g^-1 h g : h in H}``."""
    G = H.ambient
    gi = _to_index(G, g)
    conj = G.conj
    return _from_members(G, (conj(h, gi) for h in H.members))


def is_normal(G: GroupLike, H: Subgroup) -> bool:
    K = as_subgroup(G)
    A = K.ambient
    return all(H.has(A.conj(h, g)) for g in K.gens for h in H.gens)


def normalizer(G: GroupLike, H: Subgroup) -> Subgroup:
    """``N_G(H) = {g in G : H^g = H}``."""
    K = as_subgroup(G)
    A = K.ambient

    def compute():
        hg = H.gens
        conj = A.conj
        return _from_members(A, (g for g in K.members
                                 if all(H.has(conj(h, g)) for h in hg)))
    return A.cached(("normalizer", K.mask, H.mask), compute)


def centralizer(G: GroupLike, H: Subgroup) -> Subgroup:
    """``C_G(H)``: elements of ``G`` commuting with all of ``H``."""
    K = as_subgroup(G)
    A = K.ambient

    def compute():
        hg = H.gens
        mul = A.mul
        return _from_members(A, (g for g in K.members
                                 if all(mul(g, h) == mul(h, g) for h in hg)))
    return A.cached(("centralizer", K.mask, H.mask), compute)


def center(G: GroupLike) -> Subgroup:
    K = as_subgroup(G)
    return centralizer(K, K)


def is_abelian(H: GroupLike) -> bool:
    H = as_subgroup(H)
    mul = H.ambient.mul
    g = H.gens
    return all(mul(a, b) == mul(b, a) for i, a in enumerate(g) for b in g[i + 1:])


def normal_closure(G: GroupLike, H: Subgroup) -> Subgroup:
    """``H^G``: the smallest normal subgroup of ``G`` containing ``H``."""
    K = as_subgroup(G)
    A = K.ambient

    def compute():
        conj = A.conj
        return _extend(H, (conj(h, g) for h in H.gens for g in K.members))
    return A.cached(("normal_closure", K.mask, H.mask), compute)


def subnormal_chain(G: GroupLike, H: Subgroup) -> list[Subgroup]:
    """``K_0 = G, K_{i+1} = H^{K_i}`` down to its fixed point."""
    chain = [as_subgroup(G)]
    while True:
        nxt = normal_closure(chain[-1], H)
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)


def is_subnormal(G: GroupLike, H: Subgroup) -> bool:
    return subnormal_chain(G, H)[-1] == H


@dataclass(frozen=True)
class CentralSeries:
    terms: tuple[Subgroup, ...]
    stabilized: bool = True

    @property
    def top(self) -> Subgroup:
        return self.terms[-1]

    def term(self, i: int) -> Subgroup:
        """``Z_i``; indices past the end return the stable top term."""
        return self.terms[min(i, len(self.terms) - 1)]

    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


def upper_central_series(G: GroupLike) -> CentralSeries:
    """``Z_{i+1} = {x : [x, g] in Z_i for every generator g}``, until stable."""
    K = as_subgroup(G)
    A = K.ambient

    def compute():
        terms = [trivial(A)]
        comm = A.commutator
        while True:
            Z = terms[-1]
            nxt = _from_members(A, (x for x in K.members
                                    if all(Z.has(comm(x, g)) for g in K.gens)))
            if nxt == Z:
                return CentralSeries(tuple(terms))
            terms.append(nxt)
    return A.cached(("ucs", K.mask), compute)


def hypercenter(G: GroupLike) -> Subgroup:
    return upper_central_series(G).top


def commutator_subgroup(G: GroupLike) -> Subgroup:
    K = as_subgroup(G)
    A = K.ambient
    g = K.gens
    comms = [A.commutator(a, b) for i, a in enumerate(g) for b in g[i + 1:]]
    return normal_closure(K, _extend(trivial(A), comms))


def derived_series(G: GroupLike) -> list[Subgroup]:
    series = [as_subgroup(G)]
    while True:
        nxt = commutator_subgroup(series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(G: GroupLike) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_nilpotent(G: GroupLike) -> bool:
    return hypercenter(G) == as_subgroup(G)


def all_subgroups(G: GroupLike, max_lattice: int | None = None) -> list[Subgroup]:
    """The complete subgroup lattice, sorted by (order, element indices).

    Starts from the cyclic subgroups and joins every known subgroup with
    every cyclic subgroup it does not contain, until nothing new appears.
    """
    K = as_subgroup(G)
    A = K.ambient
    cap = lattice_cap(max_lattice)
    if K.order > cap:
        raise LatticeCapExceeded(
            f"lattice cap exceeded: |{A.name}| restricted to order {K.order} > {cap}")

    def compute():
        if not K.is_whole():
            full = A._cache.get(("lattice", (1 << A.order) - 1))
            if full is not None:
                return [S for S in full if S <= K]
        cyclic: dict[int, Subgroup] = {}
        for x in K.members:
            C = _extend(trivial(A), [x])
            cyclic.setdefault(C.mask, C)
        cyc = list(cyclic.values())
        known = {1: trivial(A)}
        known.update(cyclic)
        queue = list(known.values())
        while queue:
            S = queue.pop()
            for C in cyc:
                if C.mask & ~S.mask:
                    T = _extend(S, C.gens)
                    if T.mask not in known:
                        known[T.mask] = T
                        queue.append(T)
        return sorted(known.values(), key=Subgroup.sort_key)
    return A.cached(("lattice", K.mask), compute)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_factors(n: int) -> list[int]:
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


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_p_group(H: Subgroup, p: int) -> bool:
    return p_part(H.order, p) == H.order


def _power(A: FiniteGroup, x: int, k: int) -> int:
    r = 0
    for _ in range(k):
        r = A.mul(r, x)
    return r


def sylow_subgroup(G: GroupLike, p: int) -> Subgroup:
    """One Sylow ``p``-subgroup, grown inside successive normalizers."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    K = as_subgroup(G)
    A = K.ambient
    target = p_part(K.order, p)
    P = trivial(A)
    while P.order < target:
        N = normalizer(K, P)
        for x in N.members:
            if not P.has(x) and P.has(_power(A, x, p)):
                P = _extend(P, [x])
                break
        else:  # pragma: no cover - excluded by Sylow/Cauchy
            raise GroupError("no p-element found in N(P)/P")
    return P


def sylow_subgroups(G: GroupLike, p: int) -> list[Subgroup]:
    """All Sylow ``p``-subgroups (the trivial subgroup if ``p`` does not divide |G|)."""
    K = as_subgroup(G)
    A = K.ambient

    def compute():
        P = sylow_subgroup(K, p)
        seen: dict[int, Subgroup] = {P.mask: P}
        N = normalizer(K, P)
        # one representative per right coset N g
        covered = N.mask
        for g in K.members:
            if (covered >> g) & 1:
                continue
            Q = conjugate_subgroup(P, g)
            seen.setdefault(Q.mask, Q)
            covered |= _mask_of(A.order, (A.mul(n, g) for n in N.members))
        return sorted(seen.values(), key=Subgroup.sort_key)
    return A.cached(("sylow", K.mask, p), compute)


def all_sylow_subgroups(G: GroupLike) -> list[Subgroup]:
    """Union over primes dividing |G| of the Sylow subgroups."""
    K = as_subgroup(G)
    out = []
    for p in prime_factors(K.order):
        out.extend(sylow_subgroups(K, p))
    return out


def maximal_abelian_subgroups(G: GroupLike, max_lattice: int | None = None) -> list[Subgroup]:
    abelian = [S for S in all_subgroups(G, max_lattice) if is_abelian(S)]
    return [S for S in abelian if not any(S < T for T in abelian)]


def is_T_group(G: GroupLike, max_lattice: int | None = None) -> bool:
    """Every subnormal subgroup is normal."""
    K = as_subgroup(G)
    return all(is_normal(K, H) for H in all_subgroups(K, max_lattice) if is_subnormal(K, H))
