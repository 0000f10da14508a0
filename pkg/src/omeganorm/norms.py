"""Normalizer intersections over classes of subgroups.

The Omega-norm of ``G`` for a class ``Omega(G)`` of subgroups is the
intersection of ``N_G(H)`` over all ``H`` in the class, and ``G`` itself when
the class is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .embedding import PREDICATES, PROPERTY_NAMES, Predicate
from .subgroups import (GroupLike, GroupError, Subgroup, all_subgroups, all_sylow_subgroups,
                        as_subgroup, center, is_p_group, is_prime, normalizer, sylow_subgroups)

CLASS_IDS = PROPERTY_NAMES + ("sylow", "all_subgroups")

# short names accepted on the command line
CLASS_ALIASES = {
    "sn": "self_normalizing",
    "sc": "self_centralizing",
    "pronormal": "pronormal",
    "h": "h_subgroup",
    "wn": "weakly_normal",
    "subnorm": "subnormalizer_condition",
    "ne": "ne_subgroup",
    "sylow": "sylow",
    "all-subgroups": "all_subgroups",
}


@dataclass(frozen=True)
class OmegaClass:
    """A subgroup class, optionally restricted to ``p``-subgroups.

    ``include_trivial=False`` drops the trivial subgroup from the class. This
    never changes a norm (``N_G(1) = G``) but does change whether the class
    counts as empty.
    """

    id: str
    p_restriction: int | None = None
    include_trivial: bool = True

    def __post_init__(self):
        if self.id not in CLASS_IDS:
            raise GroupError(f"unknown subgroup class {self.id!r}")
        if self.p_restriction is not None and not is_prime(self.p_restriction):
            raise GroupError(f"{self.p_restriction} is not prime")

    @classmethod
    def parse(cls, name: str, p: int | None = None, include_trivial: bool = True) -> OmegaClass:
        return cls(CLASS_ALIASES.get(name, name), p, include_trivial)


def _as_class(cls) -> OmegaClass:
    return cls if isinstance(cls, OmegaClass) else OmegaClass.parse(cls)


def iter_class_members(G: GroupLike, cls, predicates: Mapping[str, Predicate] | None = None,
                       max_lattice: int | None = None) -> Iterator[Subgroup]:
    """Lazily yield the subgroups of ``G`` that belong to ``cls``."""
    cls = _as_class(cls)
    p = cls.p_restriction
    if cls.id == "sylow":
        candidates: Iterable[Subgroup] = (sylow_subgroups(G, p) if p is not None
                                          else all_sylow_subgroups(G))
        test = None
    else:
        candidates = all_subgroups(G, max_lattice)
        if cls.id == "all_subgroups":
            test = None
        else:
            test = (PREDICATES if predicates is None else predicates)[cls.id]
    for H in candidates:
        if not cls.include_trivial and H.is_trivial():
            continue
        if p is not None and not is_p_group(H, p):
            continue
        if test is None or test(G, H):
            yield H


def class_members(G: GroupLike, cls, predicates=None, max_lattice=None) -> list[Subgroup]:
    return list(iter_class_members(G, cls, predicates, max_lattice))


def intersect_normalizers(G: GroupLike, members: Iterable[Subgroup],
                          lower_bound: Subgroup | None = None) -> Subgroup:
    """``G & N_G(H1) & N_G(H2) & ...``, stopping once ``lower_bound`` is reached.

    ``lower_bound`` must lie in every normalizer being intersected.
    """
    out = as_subgroup(G)
    for H in members:
        if lower_bound is not None and out == lower_bound:
            break
        out = out & normalizer(G, H)
    return out


def omega_norm(G: GroupLike, cls, *, predicates: Mapping[str, Predicate] | None = None,
               max_lattice: int | None = None, oracle: bool = False,
               lower_bound: Subgroup | None = None) -> Subgroup:
    """Intersection of ``N_G(H)`` over ``H`` in ``cls``; ``G`` when the class is empty.

    Outside oracle mode the scan stops early once the running intersection
    equals ``lower_bound`` (default ``Z(G)``, which normalizes every subgroup).
    """
    if oracle:
        bound = None
    else:
        bound = lower_bound if lower_bound is not None else center(G)
    return intersect_normalizers(G, iter_class_members(G, cls, predicates, max_lattice), bound)


def omega_p_norm(G: GroupLike, cls, p: int, *, include_trivial: bool = True, **kw) -> Subgroup:
    name = cls.id if isinstance(cls, OmegaClass) else CLASS_ALIASES.get(cls, cls)
    return omega_norm(G, OmegaClass(name, p, include_trivial), **kw)


def sylow_norm(G: GroupLike) -> Subgroup:
    """Intersection of the normalizers of all Sylow subgroups."""
    return intersect_normalizers(G, all_sylow_subgroups(G))


def sylow_p_norm(G: GroupLike, p: int) -> Subgroup:
    return intersect_normalizers(G, sylow_subgroups(G, p))


def baer_norm(G: GroupLike, max_lattice: int | None = None, oracle: bool = False) -> Subgroup:
    """The norm: intersection of the normalizers of all subgroups."""
    return omega_norm(G, "all_subgroups", max_lattice=max_lattice, oracle=oracle)


def sc_intersection(G: GroupLike, max_lattice: int | None = None,
                    predicates: Mapping[str, Predicate] | None = None) -> Subgroup:
    """Intersection of the self-centralizing subgroups themselves."""
    out = as_subgroup(G)
    for H in iter_class_members(G, "self_centralizing", predicates, max_lattice):
        out = out & H
    return out
