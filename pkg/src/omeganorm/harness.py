"""Machine checks of the norm theorems over a corpus of groups.

Each statement is registered as a ``Check``: an evaluator returning an
``Outcome`` plus flags saying which suites it belongs to and what it needs.
``run_suite`` pairs checks with groups and collects ``CheckResult``s into a
``VerificationReport``; ``emit_report`` renders it as JSON or Markdown.
"""

from __future__ import annotations

import datetime as _dt
import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from . import __version__
from .catalog import DEFAULT_CATALOG, GroupSpec, group_document
from .embedding import (IMPLICATIONS, PREDICATES, PROPERTY_NAMES, PropertyClassification,
                        Predicate, classify, h_subgroup_witness, pronormal_witness,
                        subnormalizer_witness, weakly_normal_witness)
from .norms import (OmegaClass, baer_norm, class_members, omega_norm, omega_p_norm, sc_intersection,
                    sylow_norm, sylow_p_norm)
from .perm import FiniteGroup, GroupError
from .subgroups import (LatticeCapExceeded, Subgroup, all_subgroups, as_subgroup, center,
                        centralizer, conjugate_subgroup, hypercenter, is_normal, is_solvable,
                        is_T_group, lattice_cap, lattice_cap_scope, maximal_abelian_subgroups,
                        normalizer, prime_factors, sylow_subgroups, upper_central_series)

REPORT_SCHEMA = "omeganorm.report/1"
SUITES = ("all", "theorems", "lemmas", "counterexamples", "implications")
CORPUS = "(corpus)"

FOUR_CLASSES = ("pronormal", "h_subgroup", "weakly_normal", "subnormalizer_condition")
FIVE_CLASSES = FOUR_CLASSES + ("ne_subgroup",)


class UnknownCheck(KeyError):
    pass


class Skip(Exception):
    """Raised by an evaluator when the check does not apply."""


@dataclass
class Config:
    max_lattice: int | None = None
    max_order: int | None = None
    include_trivial: bool = True
    oracle: bool = False
    # test hook: name of an embedding predicate to corrupt
    fault: str | None = None

    def resolved(self) -> Config:
        return Config(lattice_cap(self.max_lattice), self.max_order, self.include_trivial,
                      self.oracle, self.fault)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Outcome:
    passed: bool
    details: dict = field(default_factory=dict)
    witness: dict | None = None


@dataclass
class CheckResult:
    group_name: str
    check_id: str
    status: str  # "pass" | "fail" | "skipped"
    reason: str | None = None
    details: dict = field(default_factory=dict)
    witness: dict | None = None
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        d = {"group": self.group_name, "check": self.check_id, "status": self.status,
             "details": self.details}
        if self.reason is not None:
            d["reason"] = self.reason
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    @classmethod
    def from_dict(cls, d: dict, elapsed: float = 0.0) -> CheckResult:
        return cls(d["group"], d["check"], d["status"], d.get("reason"), d.get("details", {}),
                   d.get("witness"), elapsed)


@dataclass
class VerificationReport:
    suite: str
    config: dict
    results: list[CheckResult] = field(default_factory=list)
    groups: list[dict] = field(default_factory=list)
    tool_version: str = __version__
    generated_at: str | None = None

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "schema": REPORT_SCHEMA,
            "tool_version": self.tool_version,
            "suite": self.suite,
            "config": self.config,
            "groups": self.groups,
            "checks": [r.to_dict() for r in self.results],
            "summary": self.summary,
        }
        if timing:
            # everything run-dependent lives here so the rest is reproducible
            d["timing"] = {
                "generated_at": self.generated_at,
                "elapsed_seconds": {f"{r.group_name}/{r.check_id}": round(r.elapsed, 6)
                                    for r in self.results},
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        if d.get("schema", REPORT_SCHEMA) != REPORT_SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        timing = d.get("timing") or {}
        elapsed = timing.get("elapsed_seconds", {})
        results = [CheckResult.from_dict(c, elapsed.get(f"{c['group']}/{c['check']}", 0.0))
                   for c in d.get("checks", [])]
        rep = cls(d.get("suite", "all"), d.get("config", {}), results, d.get("groups", []),
                  d.get("tool_version", __version__), timing.get("generated_at"))
        if d.get("summary") is not None and d["summary"] != rep.summary:
            raise ValueError("summary counts do not match the check list")
        return rep


# -- witness helpers ----------------------------------------------------------

def subgroup_doc(H: Subgroup) -> dict:
    return {"order": H.order, "generators": [list(g.images) for g in H.generators]}


def element_doc(G: FiniteGroup, i: int) -> list[int]:
    return list(G.elements[i].images)


def group_doc(G: FiniteGroup) -> dict:
    return group_document(G)


def _equality(G: FiniteGroup, sides: Mapping[str, Subgroup]) -> Outcome:
    """Pass iff all named subgroups coincide; orders are always recorded."""
    names = list(sides)
    details = {f"{n}_order": sides[n].order for n in names}
    first = sides[names[0]]
    for n in names[1:]:
        other = sides[n]
        if other != first:
            diff = (first.mask ^ other.mask) & -(first.mask ^ other.mask)
            return Outcome(False, details, {
                "group": group_doc(G),
                "subgroups": {k: subgroup_doc(v) for k, v in sides.items()},
                "element": element_doc(G, diff.bit_length() - 1),
                "note": f"{names[0]} != {n}; element lies in exactly one of them",
            })
    return Outcome(True, details)


# -- analysis context ---------------------------------------------------------

class GroupContext:
    """Everything the checks share for one group: config, predicates, caches."""

    def __init__(self, G: FiniteGroup, config: Config):
        self.group = G
        self.config = config
        self.predicates: dict[str, Predicate] = dict(PREDICATES)
        if config.fault:
            if config.fault not in PREDICATES:
                raise GroupError(f"unknown predicate for fault injection: {config.fault!r}")
            self.predicates[config.fault] = _corrupted(PREDICATES[config.fault])
        self._records: dict[int, PropertyClassification] | None = None

    @property
    def max_lattice(self) -> int:
        return self.config.max_lattice

    def lattice(self) -> list[Subgroup]:
        return all_subgroups(self.group, self.max_lattice)

    def records(self) -> dict[int, PropertyClassification]:
        if self._records is None:
            self._records = {H.mask: classify(self.group, H, self.predicates, strict=False)
                             for H in self.lattice()}
        return self._records

    def flag(self, H: Subgroup, name: str) -> bool:
        return getattr(self.records()[H.mask], name)

    def norm(self, cls, p: int | None = None, include_trivial: bool | None = None) -> Subgroup:
        inc = self.config.include_trivial if include_trivial is None else include_trivial
        name = cls
        kw = dict(predicates=self.predicates, max_lattice=self.max_lattice,
                  oracle=self.config.oracle)
        if p is None:
            return omega_norm(self.group, OmegaClass(name, None, inc), **kw)
        return omega_p_norm(self.group, name, p, include_trivial=inc, **kw)

    def members(self, cls, p=None, include_trivial=True) -> list[Subgroup]:
        return class_members(self.group, OmegaClass(cls, p, include_trivial), self.predicates,
                             self.max_lattice)


def _corrupted(pred: Predicate) -> Predicate:
    def wrong(G, H):
        value = pred(G, H)
        if H.is_trivial() or H == as_subgroup(G):
            return value
        return not value
    return wrong


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    id: str
    suites: tuple[str, ...]
    evaluate: Callable[[GroupContext], Outcome]
    statement: str
    needs_lattice: bool = True
    # restricts a statement about one named group
    scope: Callable[[FiniteGroup], bool] | None = None


REGISTRY: dict[str, Check] = {}


def register(check_id: str, suites: Sequence[str], statement: str, needs_lattice: bool = True,
             scope=None):
    def deco(fn):
        REGISTRY[check_id] = Check(check_id, tuple(suites), fn, statement, needs_lattice, scope)
        return fn
    return deco


@register("thm1.1", ["theorems"], "N_SN(G) = Z_inf(G)")
def _thm11(ctx: GroupContext) -> Outcome:
    G = ctx.group
    return _equality(G, {"N_SN": ctx.norm("self_normalizing"), "Z_inf": hypercenter(G)})


@register("thm1.2", ["theorems"], "intersection of self-centralizing subgroups = Z(G)")
def _thm12(ctx: GroupContext) -> Outcome:
    G = ctx.group
    C = sc_intersection(G, ctx.max_lattice, ctx.predicates)
    return _equality(G, {"C_SC": C, "Z": center(G)})


def _thm14a(cls: str):
    def evaluate(ctx: GroupContext) -> Outcome:
        G = ctx.group
        return _equality(G, {f"N_{cls}": ctx.norm(cls), "N_Sylow": sylow_norm(G),
                             "Z_inf": hypercenter(G)})
    return evaluate


def _thm14b(cls: str):
    def evaluate(ctx: GroupContext) -> Outcome:
        G = ctx.group
        details = {}
        for p in prime_factors(G.order):
            out = _equality(G, {f"N_{cls}_p": ctx.norm(cls, p), "N_Sylow_p": sylow_p_norm(G, p)})
            details[f"p={p}"] = out.details
            if not out.passed:
                out.witness["p"] = p
                return Outcome(False, details, out.witness)
        return Outcome(True, details)
    return evaluate


for _cls in FIVE_CLASSES:
    register(f"thm1.4a.{_cls}", ["theorems"],
             f"N_Omega(G) = intersection of Sylow normalizers = Z_inf(G), Omega = {_cls}"
             )(_thm14a(_cls))
for _cls in FOUR_CLASSES:
    register(f"thm1.4b.{_cls}", ["theorems"],
             f"N_Omega_p(G) = intersection of Sylow p-normalizers for every p, Omega = {_cls}"
             )(_thm14b(_cls))


@register("thm1.4a.inclusions", ["theorems", "implications"],
          "Sylow subgroups <= Omega(G) <= Sigma(G), so N_Sigma <= N_Omega <= N_Sylow")
def _inclusions(ctx: GroupContext) -> Outcome:
    G = ctx.group
    sylows = [P for p in prime_factors(G.order) for P in sylow_subgroups(G, p)]
    n_sigma = ctx.norm("subnormalizer_condition")
    n_syl = sylow_norm(G)
    details = {"N_Sigma_order": n_sigma.order, "N_Sylow_order": n_syl.order,
               "sylow_count": len(sylows)}
    for cls in FOUR_CLASSES:
        for P in sylows:
            if not ctx.flag(P, cls):
                return Outcome(False, details, {"group": group_doc(G), "subgroup": subgroup_doc(P),
                                                "note": f"Sylow subgroup is not {cls}"})
        for H in ctx.lattice():
            if ctx.flag(H, cls) and not ctx.flag(H, "subnormalizer_condition"):
                return Outcome(False, details, {"group": group_doc(G), "subgroup": subgroup_doc(H),
                                                "note": f"{cls} subgroup outside Sigma(G)"})
        n = ctx.norm(cls)
        details[f"N_{cls}_order"] = n.order
        if not (n_sigma <= n <= n_syl):
            return Outcome(False, details, {"group": group_doc(G),
                                            "subgroups": {"N_Sigma": subgroup_doc(n_sigma),
                                                          f"N_{cls}": subgroup_doc(n),
                                                          "N_Sylow": subgroup_doc(n_syl)},
                                            "note": "norms are not nested"})
    return Outcome(True, details)


def _implication(check_id: str, premise: str, conclusion: str):
    finders = {"weakly_normal": weakly_normal_witness, "pronormal": pronormal_witness,
               "h_subgroup": h_subgroup_witness}

    def evaluate(ctx: GroupContext) -> Outcome:
        G = ctx.group
        recs = ctx.records()
        held = sum(1 for r in recs.values() if getattr(r, premise))
        details = {"pairs": len(recs), "premise_holds": held}
        for r in recs.values():
            if getattr(r, premise) and not getattr(r, conclusion):
                H = r.subgroup
                w = {"group": group_doc(G), "subgroup": subgroup_doc(H), "premise": premise,
                     "conclusion": conclusion, "flags": r.flags()}
                if conclusion in finders:
                    g = finders[conclusion](G, H)
                    if g is not None:
                        w["element"] = element_doc(G, g)
                elif conclusion == "subnormalizer_condition":
                    K = subnormalizer_witness(G, H, ctx.max_lattice)
                    if K is not None:
                        w["K"] = subgroup_doc(K)
                return Outcome(False, details, w)
        return Outcome(True, details)
    return evaluate


for _cid, _a, _b in IMPLICATIONS:
    register(_cid, ["lemmas", "implications"], f"{_a} => {_b}")(_implication(_cid, _a, _b))


@register("normal.implies", ["implications"],
          "normal subgroups are pronormal, H-subgroups, weakly normal, NE and in Sigma(G)")
def _normal_implies(ctx: GroupContext) -> Outcome:
    recs = ctx.records()
    for r in recs.values():
        bad = [v for v in r.violations() if v.startswith("normal=>")]
        if bad:
            return Outcome(False, {"pairs": len(recs)},
                           {"group": group_doc(ctx.group), "subgroup": subgroup_doc(r.subgroup),
                            "flags": r.flags(), "note": ", ".join(bad)})
    return Outcome(True, {"pairs": len(recs)})


@register("lemma3.2", ["lemmas"], "every maximal abelian subgroup A has A = C_G(A)")
def _lemma32(ctx: GroupContext) -> Outcome:
    G = ctx.group
    maxab = maximal_abelian_subgroups(G, ctx.max_lattice)
    for A in maxab:
        C = centralizer(G, A)
        if C != A:
            x = (C.mask & ~A.mask).bit_length() - 1
            return Outcome(False, {"maximal_abelian": len(maxab)},
                           {"group": group_doc(G), "subgroup": subgroup_doc(A),
                            "centralizer": subgroup_doc(C), "element": element_doc(G, x)})
    return Outcome(True, {"maximal_abelian": len(maxab),
                          "orders": sorted(A.order for A in maxab)})


@register("lemma3.3.1", ["lemmas"], "H in Sigma(G) and H <= M imply H in Sigma(M)")
def _lemma331(ctx: GroupContext) -> Outcome:
    G = ctx.group
    lattice = ctx.lattice()
    sigma = ctx.predicates["subnormalizer_condition"]
    checked = 0
    for H in lattice:
        if not ctx.flag(H, "subnormalizer_condition"):
            continue
        for M in lattice:
            if H <= M:
                checked += 1
                if not sigma(M, H):
                    w = {"group": group_doc(G), "subgroup": subgroup_doc(H), "M": subgroup_doc(M)}
                    K = subnormalizer_witness(M, H, ctx.max_lattice)
                    if K is not None:
                        w["K"] = subgroup_doc(K)
                    return Outcome(False, {"pairs_checked": checked}, w)
    return Outcome(True, {"pairs_checked": checked})


@register("lemma3.3.2", ["lemmas"], "H in Sigma(G) and H subnormal imply H normal")
def _lemma332(ctx: GroupContext) -> Outcome:
    G = ctx.group
    hits = 0
    for r in ctx.records().values():
        if r.subnormalizer_condition and r.subnormal:
            hits += 1
            if not r.normal:
                H = r.subgroup
                g = next(g for g in G.gen_indices if conjugate_subgroup(H, g) != H)
                return Outcome(False, {"subnormal_in_sigma": hits},
                               {"group": group_doc(G), "subgroup": subgroup_doc(H),
                                "element": element_doc(G, g), "flags": r.flags()})
    return Outcome(True, {"subnormal_in_sigma": hits})


@register("prop3.5", ["theorems"], "SN(G) = {N_G(H) : H in Sigma(G)}")
def _prop35(ctx: GroupContext) -> Outcome:
    G = ctx.group
    recs = ctx.records()
    sn = {m for m, r in recs.items() if r.self_normalizing}
    img = {normalizer(G, r.subgroup).mask for r in recs.values() if r.subnormalizer_condition}
    details = {"SN_count": len(sn), "image_count": len(img)}
    if sn != img:
        m = min(sn ^ img)
        S = recs[m].subgroup if m in recs else None
        w = {"group": group_doc(G), "note": "in SN(G) only" if m in sn else "in image only"}
        if S is not None:
            w["subgroup"] = subgroup_doc(S)
        return Outcome(False, details, w)
    return Outcome(True, details)


@register("baer", ["theorems"], "Z_inf(G) = intersection of the normalizers of all Sylow subgroups",
          needs_lattice=False)
def _baer(ctx: GroupContext) -> Outcome:
    G = ctx.group
    return _equality(G, {"Z_inf": hypercenter(G), "N_Sylow": sylow_norm(G)})


@register("schenkman", ["theorems"], "N(G) <= Z_2(G)")
def _schenkman(ctx: GroupContext) -> Outcome:
    G = ctx.group
    N = baer_norm(G, ctx.max_lattice, ctx.config.oracle)
    Z2 = upper_central_series(G).term(2)
    details = {"N_order": N.order, "Z2_order": Z2.order}
    if not N <= Z2:
        x = (N.mask & ~Z2.mask).bit_length() - 1
        return Outcome(False, details, {"group": group_doc(G), "subgroups": {
            "N": subgroup_doc(N), "Z2": subgroup_doc(Z2)}, "element": element_doc(G, x)})
    return Outcome(True, details)


@register("cor4.1", ["theorems"], "G solvable T-group implies Z_inf(G) = N(G) <= Z_2(G)")
def _cor41(ctx: GroupContext) -> Outcome:
    G = ctx.group
    if not is_solvable(G):
        raise Skip("hypothesis not met: not solvable")
    if not is_T_group(G, ctx.max_lattice):
        raise Skip("hypothesis not met: not a T-group")
    N = baer_norm(G, ctx.max_lattice, ctx.config.oracle)
    Z2 = upper_central_series(G).term(2)
    out = _equality(G, {"Z_inf": hypercenter(G), "N": N})
    out.details["Z2_order"] = Z2.order
    if out.passed and not N <= Z2:
        return Outcome(False, out.details, {"group": group_doc(G), "subgroups": {
            "N": subgroup_doc(N), "Z2": subgroup_doc(Z2)}, "note": "N(G) not inside Z_2(G)"})
    return out


@register("tgroup.sigma", ["theorems"],
          "G is a solvable T-group iff every subgroup satisfies the subnormalizer condition")
def _tgroup_sigma(ctx: GroupContext) -> Outcome:
    G = ctx.group
    solvable = is_solvable(G)
    tgroup = is_T_group(G, ctx.max_lattice)
    outside = [r.subgroup for r in ctx.records().values() if not r.subnormalizer_condition]
    details = {"solvable": solvable, "T_group": tgroup, "outside_sigma": len(outside)}
    if (solvable and tgroup) != (not outside):
        w = {"group": group_doc(G), "note": "characterization fails"}
        if outside:
            w["subgroup"] = subgroup_doc(outside[0])
        return Outcome(False, details, w)
    return Outcome(True, details)


@register("remark1.3", ["counterexamples"], "Q16: Z(G) < N_SC(G) = Z_2(G) < Z_3(G) = G",
          scope=lambda G: G.name == "Q16")
def _remark13(ctx: GroupContext) -> Outcome:
    G = ctx.group
    ucs = upper_central_series(G)
    Z, Z2, Z3 = center(G), ucs.term(2), ucs.term(3)
    nsc = ctx.norm("self_centralizing")
    W = as_subgroup(G)
    details = {"Z_order": Z.order, "N_SC_order": nsc.order, "Z2_order": Z2.order,
               "Z3_order": Z3.order, "G_order": G.order,
               "chain": [Z.order, nsc.order, Z2.order, Z3.order]}
    ok = Z < nsc and nsc == Z2 and Z2 < Z3 and Z3 == W
    if not ok:
        return Outcome(False, details, {"group": group_doc(G), "subgroups": {
            "Z": subgroup_doc(Z), "N_SC": subgroup_doc(nsc), "Z2": subgroup_doc(Z2),
            "Z3": subgroup_doc(Z3)}})
    return Outcome(True, details)


@register("remark3.6", ["counterexamples"],
          "A5, p = 5: N_S5(G) < N_G(H) < G = N_Omega5(G) for NE-subgroups",
          scope=lambda G: G.name == "A5")
def _remark36(ctx: GroupContext) -> Outcome:
    G = ctx.group
    W = as_subgroup(G)
    sylows = sylow_subgroups(G, 5)
    H = sylows[0]
    N = normalizer(G, H)
    nontrivial = ctx.members("ne_subgroup", 5, include_trivial=False)
    restricted = ctx.norm("ne_subgroup", 5, include_trivial=False)
    with_trivial = ctx.norm("ne_subgroup", 5, include_trivial=True)
    s5 = sylow_p_norm(G, 5)
    ne = ctx.predicates["ne_subgroup"]
    details = {
        "sylow5_count": len(sylows),
        "N_H_orders": sorted({normalizer(G, P).order for P in sylows}),
        "H_is_ne": ne(G, H),
        "nontrivial_ne_5_subgroups": len(nontrivial),
        "N_Omega5_order": restricted.order,
        "N_Omega5_with_trivial_order": with_trivial.order,
        "N_S5_order": s5.order,
        "chain": [s5.order, N.order, restricted.order],
    }
    ok = (details["N_H_orders"] == [10] and not details["H_is_ne"] and not nontrivial
          and restricted == W and with_trivial == W and s5.is_trivial() and s5 < N < W)
    if not ok:
        return Outcome(False, details, {"group": group_doc(G), "subgroup": subgroup_doc(H),
                                        "subgroups": {"N_H": subgroup_doc(N),
                                                      "N_Omega5": subgroup_doc(restricted),
                                                      "N_S5": subgroup_doc(s5)}})
    return Outcome(True, details)


def check_ids(suite: str = "all") -> list[str]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return sorted(c.id for c in REGISTRY.values() if suite == "all" or suite in c.suites)


def run_check(check_id: str, G: FiniteGroup, config: Config | None = None,
              ctx: GroupContext | None = None) -> CheckResult:
    """Evaluate one registered statement on one group."""
    try:
        check = REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None
    config = (config or Config()).resolved()
    if ctx is None:
        ctx = GroupContext(G, config)
    t0 = time.perf_counter()
    if check.scope is not None and not check.scope(G):
        return CheckResult(G.name, check_id, "skipped",
                           "not applicable: statement concerns a specific group")
    if check.needs_lattice and G.order > config.max_lattice:
        return CheckResult(G.name, check_id, "skipped",
                           f"lattice cap exceeded: order {G.order} > {config.max_lattice}",
                           elapsed=time.perf_counter() - t0)
    try:
        with lattice_cap_scope(config.max_lattice):
            out = check.evaluate(ctx)
    except Skip as s:
        return CheckResult(G.name, check_id, "skipped", str(s), elapsed=time.perf_counter() - t0)
    except LatticeCapExceeded as e:
        return CheckResult(G.name, check_id, "skipped", f"lattice cap exceeded: {e}",
                           elapsed=time.perf_counter() - t0)
    status = "pass" if out.passed else "fail"
    witness = out.witness
    if not out.passed and witness is None:
        witness = {"group": group_doc(G), "note": "no structured witness available"}
    return CheckResult(G.name, check_id, status, None, out.details, witness,
                       time.perf_counter() - t0)


def _converse_check(contexts: list[GroupContext]) -> CheckResult:
    """Corpus-wide: find a pair showing each implication is not an equivalence."""
    t0 = time.perf_counter()
    found: dict[str, dict] = {}
    pairs = 0
    for ctx in contexts:
        if ctx.group.order > ctx.max_lattice:
            continue
        for r in ctx.records().values():
            pairs += 1
            for cid, a, b in IMPLICATIONS:
                if cid not in found and getattr(r, b) and not getattr(r, a):
                    found[cid] = {"group": ctx.group.name, "subgroup": subgroup_doc(r.subgroup),
                                  "holds": b, "fails": a}
    missing = [cid for cid, _, _ in IMPLICATIONS if cid not in found]
    details = {"pairs": pairs, "converse_counterexamples": found}
    if missing:
        details["informational"] = f"no converse counterexample in corpus for {', '.join(missing)}"
    return CheckResult(CORPUS, "lemma3.4.converse", "pass", None, details, None,
                       time.perf_counter() - t0)


def _as_groups(catalog: Iterable, config: Config) -> list[FiniteGroup]:
    groups = []
    for item in catalog:
        groups.append(item.build() if isinstance(item, GroupSpec) else item)
    if config.max_order is not None:
        groups = [G for G in groups if G.order <= config.max_order]
    return groups


def run_suite(suite_id: str = "all", catalog: Iterable | None = None,
              config: Config | None = None, timestamp: bool = True) -> VerificationReport:
    """Run every check of ``suite_id`` on every group it applies to.

    ``catalog`` holds ``FiniteGroup``s or ``GroupSpec``s (default: the
    built-in catalog). Failures are recorded, never raised.
    """
    ids = check_ids(suite_id)
    config = (config or Config()).resolved()
    groups = _as_groups(DEFAULT_CATALOG if catalog is None else catalog, config)
    results = []
    contexts = []
    for G in groups:
        ctx = GroupContext(G, config)
        contexts.append(ctx)
        for cid in ids:
            scope = REGISTRY[cid].scope
            if scope is not None and not scope(G):
                continue
            results.append(run_check(cid, G, config, ctx))
    if groups and (suite_id in ("all", "lemmas", "implications")):
        with lattice_cap_scope(config.max_lattice):
            results.append(_converse_check(contexts))
    results.sort(key=lambda r: (r.group_name, r.check_id))
    generated = _dt.datetime.now(_dt.timezone.utc).isoformat() if timestamp else None
    return VerificationReport(
        suite=suite_id,
        config=config.to_dict(),
        results=results,
        groups=sorted(({"name": G.name, "order": G.order, "degree": G.degree} for G in groups),
                      key=lambda g: g["name"]),
        generated_at=generated,
    )


def emit_report(report: VerificationReport, fmt: str = "json", timing: bool = True) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(timing), indent=2, sort_keys=True) + "\n"
    if fmt in ("md", "markdown"):
        return _markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")


def _primary_suite(check_id: str) -> str:
    check = REGISTRY.get(check_id)
    if check is None:
        return "implications"
    return check.suites[0]


def _markdown(report: VerificationReport) -> str:
    s = report.summary
    lines = [f"# Verification report: suite `{report.suite}`", "",
             f"tool version {report.tool_version}; "
             f"pass {s['pass']}, fail {s['fail']}, skipped {s['skipped']}", ""]
    by_suite: dict[str, list[CheckResult]] = {}
    for r in report.results:
        by_suite.setdefault(_primary_suite(r.check_id), []).append(r)
    for suite in SUITES[1:]:
        rows = by_suite.get(suite)
        if not rows:
            continue
        lines += [f"## {suite}", "", "| group | check | status | details |",
                  "|---|---|---|---|"]
        for r in rows:
            status = r.status if r.reason is None else f"{r.status} ({r.reason})"
            info = ", ".join(f"{k}={v}" for k, v in sorted(r.details.items())
                             if not isinstance(v, dict))
            lines.append(f"| {r.group_name} | {r.check_id} | {status} | {info} |")
        lines.append("")
    return "\n".join(lines)
