"""Decision procedures for subgroup embedding properties.

Each predicate has the signature ``predicate(G, H) -> bool`` where ``G`` is the
surrounding group (a ``FiniteGroup`` or a ``Subgroup``) and ``H <= G``.
Brute-force counterparts live in ``omeganorm.naive``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Callable, Mapping

from .subgroups import (GroupLike, Subgroup, _mask_of, all_subgroups, as_subgroup, centralizer,
                        conjugate_subgroup, is_normal, is_subnormal, join, normal_closure,
                        normalizer)

Predicate = Callable[[GroupLike, Subgroup], bool]

PROPERTY_NAMES = (
    "self_normalizing",
    "self_centralizing",
    "pronormal",
    "h_subgroup",
    "weakly_normal",
    "ne_subgroup",
    "subnormalizer_condition",
)


class ImplicationViolation(AssertionError):
    pass


def _coset_reps(G: GroupLike, N: Subgroup) -> list[int]:
    """One representative of each right coset ``N g`` of ``N`` in ``G``."""
    K = as_subgroup(G)
    A = K.ambient
    covered = 0
    reps = []
    for g in K.members:
        if (covered >> g) & 1:
            continue
        reps.append(g)
        covered |= _mask_of(A.order, (A.mul(n, g) for n in N.members))
    return reps


def _conjugators(G: GroupLike, H: Subgroup, full_scan: bool) -> list[int]:
    # H^g depends only on the coset N_G(H) g
    if full_scan:
        return list(as_subgroup(G).members)
    return _coset_reps(G, normalizer(G, H))


def is_self_normalizing(G: GroupLike, H: Subgroup) -> bool:
    return normalizer(G, H) == H


def is_self_centralizing(G: GroupLike, H: Subgroup) -> bool:
    return centralizer(G, H) <= H


def pronormal_witness(G: GroupLike, H: Subgroup, full_scan: bool = False) -> int | None:
    """A ``g`` for which no ``x`` in ``<H, H^g>`` has ``H^x = H^g``, or None.

    ``H^x = H^g`` exactly when ``x`` lies in the coset ``N_G(H) g``, so it is
    enough to ask whether that coset meets ``<H, H^g>``.
    """
    A = as_subgroup(G).ambient
    N = normalizer(G, H)
    for g in _conjugators(G, H, full_scan):
        L = join(H, conjugate_subgroup(H, g))
        if not any(L.has(A.mul(n, g)) for n in N.members):
            return g
    return None


def is_pronormal(G: GroupLike, H: Subgroup, full_scan: bool = False) -> bool:
    return pronormal_witness(G, H, full_scan) is None


def h_subgroup_witness(G: GroupLike, H: Subgroup, full_scan: bool = False) -> int | None:
    """A ``g`` with ``N_G(H) & H^g </= H``, or None."""
    N = normalizer(G, H)
    for g in _conjugators(G, H, full_scan):
        if not (N & conjugate_subgroup(H, g)) <= H:
            return g
    return None


def is_h_subgroup(G: GroupLike, H: Subgroup, full_scan: bool = False) -> bool:
    return h_subgroup_witness(G, H, full_scan) is None


def weakly_normal_witness(G: GroupLike, H: Subgroup, full_scan: bool = False) -> int | None:
    """A ``g`` outside ``N_G(H)`` with ``H^g <= N_G(H)``, or None."""
    N = normalizer(G, H)
    for g in _conjugators(G, H, full_scan):
        if not N.has(g) and conjugate_subgroup(H, g) <= N:
            return g
    return None


def is_weakly_normal(G: GroupLike, H: Subgroup, full_scan: bool = False) -> bool:
    return weakly_normal_witness(G, H, full_scan) is None


def is_ne_subgroup(G: GroupLike, H: Subgroup) -> bool:
    """``H = N_G(H) & H^G``."""
    return (normalizer(G, H) & normal_closure(G, H)) == H


def subnormalizer_witness(G: GroupLike, H: Subgroup,
                          max_lattice: int | None = None) -> Subgroup | None:
    """A ``K`` with ``H`` normal in ``K`` but ``N_G(K) </= N_G(H)``, or None."""
    N = normalizer(G, H)
    # H is normal in K exactly when H <= K <= N_G(H)
    for K in all_subgroups(G, max_lattice):
        if H <= K <= N and not normalizer(G, K) <= N:
            return K
    return None


def satisfies_subnormalizer_condition(G: GroupLike, H: Subgroup,
                                      max_lattice: int | None = None) -> bool:
    return subnormalizer_witness(G, H, max_lattice) is None


PREDICATES: dict[str, Predicate] = {
    "self_normalizing": is_self_normalizing,
    "self_centralizing": is_self_centralizing,
    "pronormal": is_pronormal,
    "h_subgroup": is_h_subgroup,
    "weakly_normal": is_weakly_normal,
    "ne_subgroup": is_ne_subgroup,
    "subnormalizer_condition": satisfies_subnormalizer_condition,
}

# (premise, conclusion) pairs that must hold for every subgroup
IMPLICATIONS = (
    ("lemma3.4.1", "pronormal", "weakly_normal"),
    ("lemma3.4.2", "h_subgroup", "weakly_normal"),
    ("lemma3.4.3", "weakly_normal", "subnormalizer_condition"),
    ("lemma3.4.4", "ne_subgroup", "subnormalizer_condition"),
)


@dataclass(frozen=True)
class PropertyClassification:
    subgroup: Subgroup
    self_normalizing: bool
    self_centralizing: bool
    pronormal: bool
    h_subgroup: bool
    weakly_normal: bool
    ne_subgroup: bool
    subnormalizer_condition: bool
    normal: bool
    subnormal: bool

    def flags(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "subgroup"}

    def violations(self) -> list[str]:
        out = [name for name, a, b in IMPLICATIONS if getattr(self, a) and not getattr(self, b)]
        if self.normal:
            for name in ("pronormal", "h_subgroup", "weakly_normal", "ne_subgroup",
                         "subnormalizer_condition"):
                if not getattr(self, name):
                    out.append(f"normal=>{name}")
        return out


def classify(G: GroupLike, H: Subgroup, predicates: Mapping[str, Predicate] | None = None,
             strict: bool = True) -> PropertyClassification:
    """All seven embedding properties of ``H`` in ``G`` plus normality flags.

    With ``strict`` (the default) a record that breaks one of the known
    implications raises ``ImplicationViolation``.
    """
    preds = PREDICATES if predicates is None else predicates
    rec = PropertyClassification(
        subgroup=H,
        **{name: bool(preds[name](G, H)) for name in PROPERTY_NAMES},
        normal=is_normal(G, H),
        subnormal=is_subnormal(G, H),
    )
    if strict:
        bad = rec.violations()
        if bad:
            raise ImplicationViolation(f"{H!r}: {', '.join(bad)}")
    return rec
