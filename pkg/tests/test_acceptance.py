"""End-to-end acceptance checks, one test per criterion.

Each test records a ``PASS``/``FAIL`` line; the lines are printed as they
happen and again as a block at the end of the module.
"""

import functools
import json
import subprocess
import sys
import time

import pytest

from omeganorm import naive
from omeganorm.catalog import DEFAULT_CATALOG
from omeganorm.embedding import (IMPLICATIONS, PREDICATES, PROPERTY_NAMES, classify,
                                 is_self_normalizing, satisfies_subnormalizer_condition)
from omeganorm.harness import CORPUS, run_suite
from omeganorm.norms import (CLASS_IDS, OmegaClass, baer_norm, class_members, omega_norm,
                             omega_p_norm, sc_intersection, sylow_norm, sylow_p_norm)
from omeganorm.subgroups import (all_subgroups, as_subgroup, center, centralizer, hypercenter,
                                 is_abelian, is_normal, is_solvable, is_subnormal, is_T_group,
                                 lattice_cap, maximal_abelian_subgroups, normalizer,
                                 prime_factors, subgroup_closure, sylow_subgroups,
                                 upper_central_series)

from conftest import cyc

FIVE = ("pronormal", "h_subgroup", "weakly_normal", "subnormalizer_condition", "ne_subgroup")
FOUR = FIVE[:4]

RESULTS: dict[int, str] = {}


def criterion(number: int, title: str):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                RESULTS[number] = f"FAIL criterion {number:2d}: {title}"
                print(RESULTS[number])
                raise
            RESULTS[number] = f"PASS criterion {number:2d}: {title}"
            print(RESULTS[number])
        return wrapper
    return deco


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    lines = [RESULTS[n] for n in sorted(RESULTS)]
    if reporter is not None:
        reporter.write_line("")
        for line in lines:
            reporter.write_line(line)
    else:
        print("\n".join(lines))


@pytest.fixture(scope="module")
def corpus(groups):
    """Catalog groups of order at most 120, all within the default lattice cap."""
    out = [G for G in groups.values() if G.order <= 120]
    assert all(G.order <= lattice_cap() for G in out)
    return out


@pytest.fixture(scope="module")
def pairs(corpus):
    return [(G, H) for G in corpus for H in all_subgroups(G)]


@criterion(1, "self-normalizing norm equals the hypercenter")
def test_criterion_01_self_normalizing_norm():
    t0 = time.perf_counter()
    fresh = [spec.build() for spec in DEFAULT_CATALOG if spec.expected_order <= 120]
    for name in ("C6", "S3", "D8", "Q8", "Q16", "A4", "S4", "A5", "F21", "D8xC3"):
        assert name in {G.name for G in fresh}
    for G in fresh:
        assert omega_norm(G, "self_normalizing") == hypercenter(G), G.name
    assert time.perf_counter() - t0 < 60


@criterion(2, "intersection of self-centralizing subgroups equals the centre")
def test_criterion_02_self_centralizing_intersection(corpus):
    abelian = 0
    for G in corpus:
        assert sc_intersection(G) == center(G), G.name
        if is_abelian(G):
            abelian += 1
            assert sc_intersection(G) == as_subgroup(G)
    assert abelian >= 3


@criterion(3, "Q16 chain Z < N_SC = Z_2 < Z_3 = G with orders 2, 4, 4, 16")
def test_criterion_03_q16_chain(Q16):
    series = upper_central_series(Q16)
    Z, N = center(Q16), omega_norm(Q16, "self_centralizing")
    Z2, Z3 = series.term(2), series.term(3)
    assert [Z.order, N.order, Z2.order, Z3.order] == [2, 4, 4, 16]
    assert Z < N and N == Z2 and Z2 < Z3 and Z3 == as_subgroup(Q16)


@criterion(4, "five class norms equal the Sylow norm and the hypercenter")
def test_criterion_04_class_norms(corpus):
    for G in corpus:
        Zinf, S = hypercenter(G), sylow_norm(G)
        for cls in FIVE:
            assert omega_norm(G, cls) == S == Zinf, (G.name, cls)


@criterion(5, "p-restricted class norms equal the Sylow p-norms")
def test_criterion_05_p_norms(corpus):
    checked = 0
    for G in corpus:
        for p in prime_factors(G.order):
            S = sylow_p_norm(G, p)
            for cls in FOUR:
                assert omega_p_norm(G, cls, p) == S, (G.name, cls, p)
                checked += 1
    assert checked > 100


@criterion(6, "A5 and its Sylow 5-subgroups: 1 < 10 < 60")
def test_criterion_06_a5(A5):
    P5 = sylow_subgroups(A5, 5)
    assert len(P5) == 6
    assert {normalizer(A5, H).order for H in P5} == {10}
    assert not any(PREDICATES["ne_subgroup"](A5, H) for H in P5)
    cls = OmegaClass("ne_subgroup", 5, include_trivial=False)
    assert class_members(A5, cls) == []
    restricted = omega_p_norm(A5, "ne_subgroup", 5, include_trivial=False)
    syl = sylow_p_norm(A5, 5)
    assert restricted.order == 60 and syl.order == 1
    N = normalizer(A5, P5[0])
    assert syl < N < restricted


@criterion(7, "implication lattice: no violations, converses witnessed")
def test_criterion_07_implications(pairs, groups, D8):
    assert len(pairs) >= 300
    for G, H in pairs:
        rec = classify(G, H, strict=False)
        assert rec.violations() == [], (G.name, H)
    s = subgroup_closure(D8, [cyc((1, 3), n=4)])
    rec = classify(D8, s)
    assert not (rec.pronormal or rec.h_subgroup or rec.weakly_normal)
    report = run_suite("implications", [g for g in groups.values() if g.order <= 120])
    assert report.ok
    converse = next(r for r in report.results if r.group_name == CORPUS)
    assert converse.details["pairs"] >= 300
    found = converse.details["converse_counterexamples"]
    missing = [cid for cid, _, _ in IMPLICATIONS if cid not in found]
    if missing:
        # allowed, but it has to be reported
        assert "informational" in converse.details
        print(f"  informational: {converse.details['informational']}")
    for cid in ("lemma3.4.1", "lemma3.4.2", "lemma3.4.4"):
        assert cid in found


@criterion(8, "restriction to overgroups and subnormal members of the class are normal")
def test_criterion_08_restriction_and_subnormal(corpus):
    for G in corpus:
        lattice = all_subgroups(G)
        for H in lattice:
            if not satisfies_subnormalizer_condition(G, H):
                continue
            if is_subnormal(G, H):
                assert is_normal(G, H), (G.name, H)
            for M in lattice:
                if H <= M:
                    assert satisfies_subnormalizer_condition(M, H), (G.name, H, M)


@criterion(9, "maximal abelian subgroups are their own centralizers")
def test_criterion_09_maximal_abelian(groups):
    for G in groups.values():
        found = maximal_abelian_subgroups(G)
        assert found
        for A in found:
            assert centralizer(G, A) == A, (G.name, A)


@criterion(10, "self-normalizing subgroups are the normalizers of class members")
def test_criterion_10_self_normalizing_are_normalizers(corpus):
    for G in corpus:
        lattice = all_subgroups(G)
        sn = {H for H in lattice if is_self_normalizing(G, H)}
        image = {normalizer(G, H) for H in lattice if satisfies_subnormalizer_condition(G, H)}
        assert sn == image, G.name


@criterion(11, "norm inside Z_2; solvable T-groups have hypercenter = norm")
def test_criterion_11_norm_bounds(corpus):
    solvable_t = set()
    for G in corpus:
        N = baer_norm(G)
        Z2 = upper_central_series(G).term(2)
        assert N <= Z2, G.name
        all_sigma = all(satisfies_subnormalizer_condition(G, H) for H in all_subgroups(G))
        st = is_solvable(G) and is_T_group(G)
        assert st == all_sigma, G.name
        if st:
            solvable_t.add(G.name)
            assert hypercenter(G) == N, G.name
    assert {"S3", "C6", "F21"} <= solvable_t


@criterion(12, "hypercenter equals the intersection of Sylow normalizers")
def test_criterion_12_sylow_norm(groups):
    for G in groups.values():
        assert hypercenter(G) == sylow_norm(G), G.name


@criterion(13, "optimized predicates and norms agree with brute-force oracles")
def test_criterion_13_oracles(small_groups, corpus):
    pairs = 0
    for G in small_groups:
        o = naive.NaiveOracle(G)
        for H in all_subgroups(G):
            h = frozenset(H.elements)
            for name in PROPERTY_NAMES:
                assert PREDICATES[name](G, H) == o.predicate(name, h), (G.name, H, name)
            pairs += 1
        for name in PROPERTY_NAMES:
            members = [h for h in o.lattice if o.predicate(name, h)]
            assert frozenset(omega_norm(G, name).elements) == o.norm(members)
    assert pairs > 150
    for G in corpus:
        for cid in CLASS_IDS:
            assert omega_norm(G, cid) == omega_norm(G, cid, oracle=True), (G.name, cid)
            for p in prime_factors(G.order):
                assert omega_p_norm(G, cid, p) == omega_p_norm(G, cid, p, oracle=True)
        assert baer_norm(G) == baer_norm(G, oracle=True)


def _verify_all() -> tuple[int, str]:
    proc = subprocess.run([sys.executable, "-m", "omeganorm", "verify", "--suite", "all"],
                          capture_output=True, text=True, timeout=600)
    doc = json.loads(proc.stdout)
    doc.pop("timing")
    return proc.returncode, json.dumps(doc, indent=2, sort_keys=True)


@criterion(14, "verify --suite all is deterministic and exits 0")
def test_criterion_14_determinism():
    code1, first = _verify_all()
    code2, second = _verify_all()
    assert code1 == code2 == 0
    assert first == second
    assert json.loads(first)["summary"]["fail"] == 0
