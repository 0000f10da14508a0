import json

import pytest

from omeganorm.catalog import DEFAULT_CATALOG, parse_group_document
from omeganorm.embedding import PREDICATES
from omeganorm.harness import (CORPUS, REGISTRY, SUITES, CheckResult, Config, UnknownCheck,
                               VerificationReport, check_ids, emit_report, run_check, run_suite)
from omeganorm.perm import GroupError, Permutation
from omeganorm.subgroups import subgroup_closure


def _strip_timing(text: str) -> dict:
    doc = json.loads(text)
    doc.pop("timing", None)
    return doc


def test_check_ids_by_suite():
    everything = check_ids("all")
    assert everything == sorted(REGISTRY)
    for required in ("thm1.1", "thm1.2", "remark1.3", "remark3.6", "lemma3.2", "prop3.5",
                     "baer", "schenkman", "cor4.1", "lemma3.3.1", "lemma3.3.2",
                     "thm1.4a.ne_subgroup", "thm1.4b.weakly_normal", "lemma3.4.3"):
        assert required in everything
    for suite in SUITES[1:]:
        assert set(check_ids(suite)) <= set(everything)
    assert "remark3.6" in check_ids("counterexamples")
    with pytest.raises(ValueError):
        check_ids("bogus")


def test_run_check_examples(groups):
    r = run_check("thm1.1", groups["S3"])
    assert r.status == "pass"
    assert r.details == {"N_SN_order": 1, "Z_inf_order": 1}
    r = run_check("remark1.3", groups["Q16"])
    assert r.status == "pass"
    r = run_check("remark3.6", groups["A5"])
    assert r.status == "pass"
    assert r.details["N_H_orders"] == [10]
    assert r.details["chain"] == [1, 10, 60]


def test_scoped_and_skipped_checks(groups):
    r = run_check("remark1.3", groups["S3"])
    assert r.status == "skipped" and r.reason.startswith("not applicable")
    r = run_check("cor4.1", groups["S4"])
    assert r.status == "skipped" and r.reason.startswith("hypothesis not met")
    r = run_check("cor4.1", groups["F21"])
    assert r.status == "pass"


def test_lattice_cap_skip_has_reason(groups):
    r = run_check("thm1.1", groups["A5"], Config(max_lattice=50))
    assert r.status == "skipped"
    assert "lattice cap exceeded" in r.reason
    # Sylow-only statements run above the cap
    assert run_check("baer", groups["A5"], Config(max_lattice=50)).status == "pass"


def test_unknown_check(groups):
    with pytest.raises(UnknownCheck):
        run_check("thm9.9", groups["S3"])


def test_counterexample_suite():
    specs = [s for s in DEFAULT_CATALOG if s.name in ("Q16", "A5")]
    report = run_suite("counterexamples", specs)
    assert report.ok
    checks = {(r.group_name, r.check_id): r.status for r in report.results}
    assert checks == {("Q16", "remark1.3"): "pass", ("A5", "remark3.6"): "pass"}


def test_empty_catalog():
    report = run_suite("all", [])
    assert report.results == []
    assert report.summary == {"pass": 0, "fail": 0, "skipped": 0}
    doc = json.loads(emit_report(report))
    assert doc["checks"] == [] and doc["summary"] == {"pass": 0, "fail": 0, "skipped": 0}


@pytest.fixture(scope="module")
def small_report():
    specs = [s for s in DEFAULT_CATALOG if s.name in ("S3", "S4", "Q16", "S3xS3", "C6")]
    return run_suite("all", specs)


def test_report_contents(small_report):
    assert small_report.ok
    groups = [g["name"] for g in small_report.groups]
    assert groups == sorted(groups)
    keys = [(r.group_name, r.check_id) for r in small_report.results]
    assert keys == sorted(keys)
    converse = [r for r in small_report.results if r.group_name == CORPUS]
    assert len(converse) == 1 and converse[0].status == "pass"
    found = converse[0].details["converse_counterexamples"]
    assert {"lemma3.4.1", "lemma3.4.2", "lemma3.4.4"} <= set(found)


def test_json_roundtrip(small_report):
    text = emit_report(small_report)
    back = VerificationReport.from_dict(json.loads(text))
    assert back.summary == small_report.summary
    assert emit_report(back) == text
    bad = json.loads(text)
    bad["summary"]["pass"] += 1
    with pytest.raises(ValueError):
        VerificationReport.from_dict(bad)
    r = small_report.results[0]
    assert CheckResult.from_dict(r.to_dict()).to_dict() == r.to_dict()


def test_markdown_report(small_report):
    md = emit_report(small_report, "md")
    assert md.startswith("# Verification report")
    assert "## theorems" in md and "## counterexamples" in md
    assert "| Q16 | remark1.3 | pass |" in md
    with pytest.raises(ValueError):
        emit_report(small_report, "xml")


def test_report_is_deterministic():
    specs = [s for s in DEFAULT_CATALOG if s.name in ("D8", "A4", "F21")]
    a = emit_report(run_suite("all", specs))
    b = emit_report(run_suite("all", specs))
    assert _strip_timing(a) == _strip_timing(b)
    assert emit_report(run_suite("all", specs), timing=False) == \
        emit_report(run_suite("all", specs), timing=False)


def test_max_order_filters_groups():
    report = run_suite("theorems", None, Config(max_order=8))
    assert {g["order"] for g in report.groups} <= {1, 2, 4, 6, 8}
    assert report.ok


def test_fault_injection_is_caught_with_reverifiable_witness(groups):
    report = run_suite("lemmas", [groups["S3"], groups["D8"], groups["A4"]],
                       Config(fault="weakly_normal"))
    assert not report.ok
    failures = [r for r in report.results if r.status == "fail"]
    assert any(r.check_id == "lemma3.4.1" for r in failures)
    r = next(r for r in failures if r.check_id == "lemma3.4.1")
    w = r.witness
    # rebuild everything from the witness alone
    G = parse_group_document(json.dumps(w["group"]))
    H = subgroup_closure(G, [Permutation(g) for g in w["subgroup"]["generators"]])
    assert H.order == w["subgroup"]["order"]
    assert w["premise"] == "pronormal" and w["conclusion"] == "weakly_normal"
    assert PREDICATES["pronormal"](G, H)
    # the true predicate holds: the recorded failure came from the fault
    assert PREDICATES["weakly_normal"](G, H)
    assert w["flags"]["weakly_normal"] is False


def test_fault_breaks_theorem_checks(groups):
    r = run_check("thm1.4a.pronormal", groups["S3"], Config(fault="pronormal"))
    assert r.status == "fail"
    assert "element" in r.witness and "subgroups" in r.witness
    with pytest.raises(GroupError):
        run_check("thm1.1", groups["S3"], Config(fault="nonsense"))
