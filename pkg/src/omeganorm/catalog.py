"""Built-in groups and the JSON group file format.

A group file holds one JSON object::

    {"name": "A5", "degree": 5,
     "generators": [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]],
     "expected_order": 60}

``generators`` are 0-indexed image arrays of length ``degree``;
``expected_order`` is optional. Catalog directories hold ``*.group.json``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .perm import (DEFAULT_MAX_ORDER, FiniteGroup, GroupError, Permutation,
                   group_from_generators)


class GroupFileError(GroupError):
    pass


def _cycle(points, degree: int) -> Permutation:
    return Permutation.from_cycles([tuple(points)], degree)


def cyclic(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    gens = [_cycle(range(n), n)] if n > 1 else []
    return group_from_generators(f"C{n}", n, gens, max_order)


def dihedral(order: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Dihedral group of the given order (``2n``) acting on the ``n``-gon."""
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be an even number >= 2")
    n = order // 2
    name = f"D{order}"
    if n == 1:
        return group_from_generators(name, 2, [_cycle((0, 1), 2)], max_order)
    if n == 2:
        gens = [Permutation.from_cycles([(0, 1), (2, 3)], 4),
                Permutation.from_cycles([(0, 2), (1, 3)], 4)]
        return group_from_generators(name, 4, gens, max_order)
    rot = _cycle(range(n), n)
    refl = Permutation([(-i) % n for i in range(n)])
    return group_from_generators(name, n, [rot, refl], max_order)


def dicyclic(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """``Q_{4n} = <a, b | a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1>`` on its own elements.

    Element ``a^i b^j`` gets label ``i + 2n*j``; each generator acts by right
    multiplication, which is a homomorphism under the apply-left-first
    composition order.
    """
    if n < 1:
        raise GroupError("dicyclic group needs n >= 1")
    m = 2 * n

    def mul(x, y):
        (i, j), (k, l) = x, y
        e = (i + (k if j == 0 else -k)) % m
        if j + l == 2:
            return ((e + n) % m, 0)
        return (e, j + l)

    labels = [(i, j) for j in (0, 1) for i in range(m)]
    pos = {x: t for t, x in enumerate(labels)}
    gens = [Permutation([pos[mul(z, g)] for z in labels]) for g in ((1, 0), (0, 1))]
    return group_from_generators(f"Q{4 * n}", 4 * n, gens, max_order)


def symmetric(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric group needs n >= 1")
    gens = []
    if n >= 2:
        gens.append(_cycle((0, 1), n))
    if n >= 3:
        gens.append(_cycle(range(n), n))
    return group_from_generators(f"S{n}", n, gens, max_order)


def alternating(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise GroupError("alternating group needs n >= 1")
    gens = []
    if n >= 3:
        gens.append(_cycle((0, 1, 2), n))
    if n >= 4:
        gens.append(_cycle(range(n) if n % 2 else range(1, n), n))
    return group_from_generators(f"A{n}", n, gens, max_order)


def elementary_abelian(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """``(C_p)^k`` as ``k`` disjoint ``p``-cycles."""
    from .subgroups import is_prime
    if not is_prime(p) or k < 1:
        raise GroupError("elementary abelian group needs a prime p and k >= 1")
    deg = p * k
    gens = [_cycle(range(i * p, (i + 1) * p), deg) for i in range(k)]
    return group_from_generators(f"C{p}^{k}", deg, gens, max_order)


def frobenius_21(max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """``C7 : C3``: translations and the multiplier ``x -> 2x`` mod 7."""
    gens = [_cycle(range(7), 7), Permutation([(2 * x) % 7 for x in range(7)])]
    return group_from_generators("F21", 7, gens, max_order)


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None,
                   max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """``A x B`` acting on the disjoint union of the two point sets."""
    a, b = A.degree, B.degree
    gens = [Permutation(list(g.images) + list(range(a, a + b))) for g in A.generators]
    gens += [Permutation(list(range(a)) + [a + x for x in g.images]) for g in B.generators]
    return group_from_generators(name or f"{A.name}x{B.name}", a + b, gens, max_order)


CONSTRUCTORS = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "dicyclic": (dicyclic, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "elementary_abelian": (elementary_abelian, 2),
    "frobenius_21": (frobenius_21, 0),
}


_SHORT = (
    (re.compile(r"C(\d+)\^(\d+)"), "elementary_abelian"),
    (re.compile(r"C(\d+)"), "cyclic"),
    (re.compile(r"D(\d+)"), "dihedral"),
    (re.compile(r"Q(\d+)"), "dicyclic"),
    (re.compile(r"S(\d+)"), "symmetric"),
    (re.compile(r"A(\d+)"), "alternating"),
    (re.compile(r"F21"), "frobenius_21"),
)

NAMERS = {
    "cyclic": lambda n: f"C{n}",
    "dihedral": lambda n: f"D{n}",
    "dicyclic": lambda n: f"Q{4 * n}",
    "symmetric": lambda n: f"S{n}",
    "alternating": lambda n: f"A{n}",
    "elementary_abelian": lambda p, k: f"C{p}^{k}",
    "frobenius_21": lambda: "F21",
}


def _resolve_short(name: str) -> tuple[str, list[int]] | None:
    """``"Q16"`` -> ``("dicyclic", [4])`` and so on."""
    for pattern, ctor in _SHORT:
        m = pattern.fullmatch(name)
        if m:
            params = [int(x) for x in m.groups()]
            if ctor == "dicyclic":
                if params[0] % 4:
                    return None
                params = [params[0] // 4]
            return ctor, params
    return None


def builtin(name: str, params=(), max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Construct a built-in group, e.g. ``builtin("dihedral", [8])``.

    Short names (``"Q16"``, ``"C2^3"``) and direct products of them
    (``"D8xC3"``) are accepted as well.
    """
    params = [int(x) for x in params]
    if name in CONSTRUCTORS:
        fn, arity = CONSTRUCTORS[name]
        if len(params) != arity:
            raise GroupError(f"builtin {name} takes {arity} parameter(s), got {len(params)}")
        return fn(*params, max_order=max_order)
    if not params:
        factors = name.split("x")
        if len(factors) > 1 and all(factors):
            G = builtin(factors[0], max_order=max_order)
            for f in factors[1:]:
                G = direct_product(G, builtin(f, max_order=max_order), max_order=max_order)
            return G
        short = _resolve_short(name)
        if short is not None:
            return builtin(short[0], short[1], max_order=max_order)
    raise GroupError(f"unknown builtin group {name!r}")


@dataclass(frozen=True)
class GroupSpec:
    """How to build one corpus group: ``builtin:NAME[:params]`` or a file path."""

    name: str
    source: str
    expected_order: int | None = None

    def build(self, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
        if self.source.startswith("builtin:"):
            parts = self.source.split(":")[1:]
            G = builtin(parts[0], parts[1:], max_order=max_order)
            G.name = self.name
        else:
            G = load_group_file(self.source, max_order=max_order)
        if self.expected_order is not None and G.order != self.expected_order:
            raise GroupError(f"{self.name}: expected order {self.expected_order}, got {G.order}")
        return G


DEFAULT_CATALOG: tuple[GroupSpec, ...] = (
    GroupSpec("C1", "builtin:cyclic:1", 1),
    GroupSpec("C2", "builtin:cyclic:2", 2),
    GroupSpec("C6", "builtin:cyclic:6", 6),
    GroupSpec("C8", "builtin:cyclic:8", 8),
    GroupSpec("C2^2", "builtin:elementary_abelian:2:2", 4),
    GroupSpec("C2^3", "builtin:elementary_abelian:2:3", 8),
    GroupSpec("C3^2", "builtin:elementary_abelian:3:2", 9),
    GroupSpec("S3", "builtin:symmetric:3", 6),
    GroupSpec("D8", "builtin:dihedral:8", 8),
    GroupSpec("Q8", "builtin:dicyclic:2", 8),
    GroupSpec("D10", "builtin:dihedral:10", 10),
    GroupSpec("D12", "builtin:dihedral:12", 12),
    GroupSpec("Q12", "builtin:dicyclic:3", 12),
    GroupSpec("A4", "builtin:alternating:4", 12),
    GroupSpec("D16", "builtin:dihedral:16", 16),
    GroupSpec("Q16", "builtin:dicyclic:4", 16),
    GroupSpec("C3xS3", "builtin:C3xS3", 18),
    GroupSpec("F21", "builtin:frobenius_21", 21),
    GroupSpec("S4", "builtin:symmetric:4", 24),
    GroupSpec("D8xC3", "builtin:D8xC3", 24),
    GroupSpec("S3xS3", "builtin:S3xS3", 36),
    GroupSpec("Q8xC3", "builtin:Q8xC3", 24),
    GroupSpec("A5", "builtin:alternating:5", 60),
    GroupSpec("S5", "builtin:symmetric:5", 120),
)


def parse_group_ref(ref: str) -> GroupSpec:
    """``builtin:NAME[:params]`` or a path to a group file."""
    if ref.startswith("builtin:"):
        parts = ref.split(":")[1:]
        if not parts or not parts[0]:
            raise GroupError(f"empty builtin reference {ref!r}")
        if len(parts) == 1:
            for spec in DEFAULT_CATALOG:
                if spec.name == parts[0]:
                    return spec
        return GroupSpec(_default_name(parts), ref)
    return GroupSpec(Path(ref).name.removesuffix(".json").removesuffix(".group"), ref)


def _default_name(parts: list[str]) -> str:
    name, params = parts[0], parts[1:]
    if name in NAMERS:
        try:
            return NAMERS[name](*(int(x) for x in params))
        except (TypeError, ValueError):
            pass
    return ":".join(parts)


def group_from_ref(ref: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    return parse_group_ref(ref).build(max_order)


def _fail(path, msg):
    raise GroupFileError(f"{path}: {msg}")


def parse_group_document(text: str, source: str = "<string>",
                         max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GroupFileError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        _fail(source, "top level must be a JSON object")
    for key in doc:
        if key not in ("name", "degree", "generators", "expected_order"):
            _fail(source, f"unknown key {key!r}")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        _fail(source, "'name' must be a non-empty string")
    degree = doc.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        _fail(source, "'degree' must be a positive integer")
    gens = doc.get("generators")
    if not isinstance(gens, list):
        _fail(source, "'generators' must be a list of image arrays")
    perms = []
    for i, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != degree:
            _fail(source, f"generators[{i}] must be a list of length {degree}")
        for j, x in enumerate(g):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < degree:
                _fail(source, f"generators[{i}][{j}] = {x!r} is out of range 0..{degree - 1}")
        if len(set(g)) != degree:
            _fail(source, f"generators[{i}] repeats an image, not a permutation")
        perms.append(Permutation(g))
    expected = doc.get("expected_order")
    if expected is not None and (not isinstance(expected, int) or isinstance(expected, bool)):
        _fail(source, "'expected_order' must be an integer")
    G = group_from_generators(name, degree, perms, max_order)
    if expected is not None and G.order != expected:
        _fail(source, f"order mismatch: expected {expected}, generated group has order {G.order}")
    return G


def load_group_file(path, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GroupFileError(f"{path}: {e.strerror}") from None
    return parse_group_document(text, str(path), max_order)


def group_document(G: FiniteGroup, expected_order: bool = True) -> dict:
    doc = {"name": G.name, "degree": G.degree,
           "generators": [list(g.images) for g in G.generators]}
    if expected_order:
        doc["expected_order"] = G.order
    return doc


def catalog_dir_specs(directory) -> list[GroupSpec]:
    directory = Path(directory)
    if not directory.is_dir():
        raise GroupFileError(f"{directory}: not a directory")
    return [parse_group_ref(str(p)) for p in sorted(directory.glob("*.group.json"))]
