"""Verification report plumbing: check registry, gating, budgets, determinism."""

from __future__ import annotations

import json

import pytest

from ugconn.cayley import with_redirected_cross_edge
from ugconn.lemmas import (
    CHECK_IDS,
    FAIL,
    PROVED,
    SAMPLED,
    SKIPPED,
    TOOL_VERSION,
    verify_all,
)

VERDICTS = {PROVED, SAMPLED, FAIL, SKIPPED}


def test_check_registry_is_fixed():
    assert len(CHECK_IDS) == 17
    assert len(set(CHECK_IDS)) == 17
    assert all("-" in cid and cid == cid.lower() for cid in CHECK_IDS)


def test_full_mb4_report_passes(mb4):
    rep = verify_all(mb4, workers=1, seed=0)
    assert rep.passed()
    assert rep.failures() == []
    assert [c.check_id for c in rep.checks] == list(CHECK_IDS)
    assert all(c.verdict in VERDICTS for c in rep.checks)
    ran = [c for c in rep.checks if c.verdict != SKIPPED]
    skipped = [c for c in rep.checks if c.verdict == SKIPPED]
    assert len(ran) == 16
    assert [c.check_id for c in skipped] == ["cyclic-cut-falsify"]
    # n=4 is small enough that nothing needs sampling
    assert all(c.verdict == PROVED for c in ran)


def test_report_serialization_shape(mb4):
    rep = verify_all(mb4, workers=1, checks=["cross-edge-count"])
    js = rep.to_jsonable(with_timing=False)
    assert js["schema"] == 1
    assert js["version"] == TOOL_VERSION
    assert js["seed"] == 0
    assert js["passed"] is True
    assert sorted(js["graph"]) == [
        "class", "degree", "descriptor", "edges", "n", "order",
    ]
    assert js["graph"]["class"] == "Cycle" and js["graph"]["order"] == 24
    (entry,) = js["checks"]
    assert sorted(entry) == ["detail", "gating", "id", "scope", "verdict"]
    timed = rep.to_jsonable(with_timing=True)
    assert all("millis" in c for c in timed["checks"])


def test_body_bytes_is_canonical_and_untimed(mb4):
    rep = verify_all(mb4, workers=1, checks=["cross-edge-count", "four-cycle-labels"])
    body = rep.body_bytes()
    decoded = json.loads(body)
    assert decoded == rep.to_jsonable(with_timing=False)
    assert b"millis" not in body
    assert body == json.dumps(decoded, sort_keys=True, separators=(",", ":")).encode()


def test_body_bytes_worker_invariant(mb4):
    picks = ["common-neighbor-bound", "cross-edge-count", "four-cycle-labels"]
    one = verify_all(mb4, workers=1, checks=picks)
    three = verify_all(mb4, workers=3, checks=picks)
    assert one.body_bytes() == three.body_bytes()


def test_check_selection_preserves_registry_order(mb4):
    rep = verify_all(mb4, workers=1, checks=["four-cycle-labels", "common-neighbor-bound"])
    assert [c.check_id for c in rep.checks] == [
        "common-neighbor-bound",
        "four-cycle-labels",
    ]


def test_unknown_check_id_is_rejected(mb4):
    with pytest.raises(ValueError) as err:
        verify_all(mb4, checks=["bogus-check"])
    assert "bogus-check" in str(err.value)
    assert "common-neighbor-bound" in str(err.value)


def test_mb_scoped_checks_run_exploratory_on_ug5(ug5):
    picks = [
        "out-neighbor-disjoint",
        "out-neighbor-escape",
        "adjacent-pair-common-neighbor",
        "common-neighbor-triple",
    ]
    rep = verify_all(ug5, workers=1, checks=picks)
    by_id = {c.check_id: c for c in rep.checks}
    assert all(not c.gating for c in rep.checks)
    assert all("exploratory" in c.scope for c in rep.checks)
    # single out-neighbors are still pairwise distinct off the cycle family
    assert by_id["out-neighbor-disjoint"].verdict == PROVED
    # escape and the triple exclusion genuinely break on the pendant graph
    assert by_id["out-neighbor-escape"].verdict == FAIL
    assert by_id["common-neighbor-triple"].verdict == FAIL
    assert rep.passed()  # exploratory failures never gate


def test_corrupted_adjacency_flips_gating_checks(mb4):
    bad = with_redirected_cross_edge(mb4)
    rep = verify_all(bad, workers=1, checks=["cross-edge-count", "out-neighbor-disjoint"])
    assert not rep.passed()
    assert set(rep.failures()) == {"cross-edge-count", "out-neighbor-disjoint"}
    assert all(c.gating and c.failed for c in rep.checks if c.verdict == FAIL)
    detail = {c.check_id: c.detail for c in rep.checks}["cross-edge-count"]
    assert detail["violation"] is not None


def test_family_scoped_checks_skip_on_star(star4):
    rep = verify_all(
        star4,
        workers=1,
        checks=["common-neighbor-bound", "connectivity-value", "cyclic-cut-exact"],
    )
    by_id = {c.check_id: c for c in rep.checks}
    assert by_id["common-neighbor-bound"].verdict == SKIPPED
    assert by_id["cyclic-cut-exact"].verdict == SKIPPED
    conn = by_id["connectivity-value"]
    assert conn.verdict == PROVED and conn.detail["kappa"] == 3
    assert rep.passed()


def test_connectivity_detail_on_path(b4):
    rep = verify_all(b4, workers=1, checks=["connectivity-value"])
    (c,) = rep.checks
    assert c.verdict == PROVED
    assert c.detail["kappa"] == c.detail["expected"] == 3
    assert len(c.detail["minimum_cut"]) == 3


def test_sampled_branch_reports_supported_only(mb6):
    rep = verify_all(mb6, workers=1, checks=["four-subset-neighborhood"])
    (c,) = rep.checks
    assert c.verdict == SAMPLED
    assert c.detail["best_found"] == 15
    assert c.detail["floor"] == 15  # the 4n-9 floor is sharp at n=6
    assert rep.passed()


def test_budget_skips_expensive_checks(mb4):
    rep = verify_all(mb4, workers=1, budget=0.5)
    skipped = [c for c in rep.checks if c.verdict == SKIPPED]
    assert len(skipped) >= 10
    assert any("budget" in c.scope for c in skipped)
    assert rep.passed()  # skips never fail the run
    assert rep.to_jsonable(with_timing=False)["budget_seconds"] == 0.5


def test_text_table_summarizes_verdicts(mb4):
    rep = verify_all(mb4, workers=1, checks=["cross-edge-count"])
    table = rep.text_table()
    lines = table.splitlines()
    assert lines[0].startswith("graph: class=Cycle n=4")
    assert any("cross-edge-count" in ln and "PROVED-EXHAUSTIVE" in ln for ln in lines)
    assert lines[-1] == "PASS: 1 checks run, 0 skipped"

    bad = with_redirected_cross_edge(mb4)
    rep2 = verify_all(bad, workers=1, checks=["cross-edge-count"])
    assert rep2.text_table().splitlines()[-1].startswith("FAIL:")


def test_falsifier_check_skips_off_n5(mb4):
    rep = verify_all(mb4, workers=1, checks=["cyclic-cut-falsify"])
    (c,) = rep.checks
    assert c.verdict == SKIPPED
    assert "n=5" in c.scope or "5" in c.scope
