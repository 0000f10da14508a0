"""Permutations and explicitly enumerated permutation groups.

Composition order is fixed throughout the package: ``compose(a, b)`` means
"apply ``a`` first, then ``b``", so ``compose(a, b)[i] == b[a[i]]``.
Conjugation follows the same order: ``conjugate(h, g) = g^-1 h g``.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Iterable, Sequence
from functools import reduce

import numpy as np

DEFAULT_MAX_ORDER = 20000
# above this order products are computed on demand instead of tabulated
TABLE_LIMIT = 2048


class GroupError(ValueError):
    """Base class for errors raised while building or querying groups."""


class OrderCapExceeded(GroupError):
    """A closure or enumeration grew past its configured cap."""


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as its image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n < 1:
            raise GroupError("permutation degree must be at least 1")
        if sorted(images) != list(range(n)):
            raise GroupError(f"not a permutation of 0..{n - 1}: {list(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise GroupError("permutation degree must be at least 1")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles([(0, 1, 2)], 4)``."""
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if not 0 <= x < degree or x in seen:
                    raise GroupError(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(x)
                images[x] = cyc[(k + 1) % len(cyc)]
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def _check_degree(a: Permutation, b: Permutation) -> None:
    if a.degree != b.degree:
        raise GroupError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a``, then ``b``."""
    _check_degree(a, b)
    bi = b.images
    return Permutation._trusted(tuple(bi[x] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, x in enumerate(a.images):
        inv[x] = i
    return Permutation._trusted(tuple(inv))


def conjugate(h: Permutation, g: Permutation) -> Permutation:
    """``h^g = g^-1 h g``."""
    _check_degree(h, g)
    return compose(compose(inverse(g), h), g)


def element_order(g: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in g.cycles()), 1)


class FiniteGroup:
    """A permutation group together with its full, sorted element list.

    Elements are addressed by their index in ``elements``; the identity is
    always index 0 because it is lexicographically smallest. The product
    table and the per-group caches are built lazily and guarded by a lock.
    """

    def __init__(self, name: str, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.name = name
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index = {p.images: i for i, p in enumerate(self.elements)}
        self.order = len(self.elements)
        self.gen_indices = tuple(self.index[g.images] for g in self.generators)
        self._lock = threading.RLock()
        self._table: list[list[int]] | None = None
        self._inv: list[int] | None = None
        self._cache: dict = {}
        self._interned: dict = {}

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order} degree={self.degree}>"

    def __len__(self):
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g.images in self.index

    def index_of(self, g: Permutation) -> int:
        try:
            return self.index[g.images]
        except KeyError:
            raise GroupError(f"{g} is not an element of {self.name}") from None

    @property
    def table(self) -> list[list[int]] | None:
        """``table[i][j]`` is the index of ``compose(elements[i], elements[j])``.

        ``None`` for groups above ``TABLE_LIMIT``.
        """
        if self._table is None and self.order <= TABLE_LIMIT:
            with self._lock:
                if self._table is None:
                    self._table = _product_table(self.elements, self.degree)
        return self._table

    @property
    def inverses(self) -> list[int]:
        if self._inv is None:
            with self._lock:
                if self._inv is None:
                    self._inv = [self.index[inverse(p).images] for p in self.elements]
        return self._inv

    def mul(self, i: int, j: int) -> int:
        t = self.table
        if t is not None:
            return t[i][j]
        a, b = self.elements[i].images, self.elements[j].images
        return self.index[tuple(b[x] for x in a)]

    def conj(self, h: int, g: int) -> int:
        """Index of ``h^g``."""
        return self.mul(self.mul(self.inverses[g], h), g)

    def commutator(self, x: int, y: int) -> int:
        """Index of ``[x, y] = x^-1 y^-1 x y``."""
        inv = self.inverses
        return self.mul(self.mul(inv[x], inv[y]), self.mul(x, y))

    def cached(self, key, compute):
        """Per-group memo for pure derived data (lattice, normalizers, ...)."""
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)


def _product_table(elements: Sequence[Permutation], degree: int) -> list[list[int]]:
    dtype = np.uint8 if degree <= 256 else np.dtype(">u2")
    E = np.array([p.images for p in elements], dtype=dtype)
    width = E.dtype.itemsize * degree
    keys = np.ascontiguousarray(E).view(np.dtype((np.void, width))).ravel()
    rows = []
    for p in elements:
        # compose(p, q)[x] = q[p[x]] for every q at once
        prod = np.ascontiguousarray(E[:, list(p.images)])
        rows.append(np.searchsorted(keys, prod.view(np.dtype((np.void, width))).ravel()).tolist())
    return rows


def group_from_generators(name: str, degree: int, gens: Sequence[Permutation],
                          max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Enumerate ``<gens>`` by breadth-first closure.

    Raises ``OrderCapExceeded`` as soon as more than ``max_order`` elements
    are found.
    """
    if max_order < 1:
        raise GroupError("max_order must be at least 1")
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in gens]
    for g in gens:
        if g.degree != degree:
            raise GroupError(f"generator {g!r} does not have degree {degree}")
    ident = tuple(range(degree))
    gen_images = [g.images for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for gi in gen_images:
                y = tuple(gi[k] for k in x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > max_order:
                        raise OrderCapExceeded(
                            f"order cap exceeded: <generators of {name}> has more than "
                            f"{max_order} elements")
                    nxt.append(y)
        frontier = nxt
    elements = [Permutation._trusted(t) for t in sorted(seen)]
    return FiniteGroup(name, degree, gens, elements)
