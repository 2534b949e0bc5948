from __future__ import annotations

import json

import pytest

from quivermut import (
    ClaimResult,
    add_puncture_on_arc,
    has_failure,
    has_spade_triangle,
    polygon_fan_triangulation,
    qg0_triangulation,
    qgb_triangulation,
    report_to_json,
    run_claims,
    verify_an_embedding,
    verify_corollary,
    verify_exceptional,
    verify_flip_mutation,
    verify_lemma_addb,
    verify_lemma_addp,
    verify_prop_in1out1,
    verify_theorem_const,
)
from quivermut.errors import UnsupportedSurface
from quivermut.verify import standard_claims


def test_flip_mutation_passes_on_generators():
    for t in (qg0_triangulation(1), polygon_fan_triangulation(6),
              qgb_triangulation(1, 1)):
        r = verify_flip_mutation(t)
        assert r.status == "Pass"
        assert "flips checked" in r.detail


def test_in1out1_polygon_detail():
    r = verify_prop_in1out1(polygon_fan_triangulation(8), 3)
    assert r.status == "Pass"
    assert "19 triangulations" in r.detail
    assert "95 vertices checked" in r.detail
    assert "2c" in r.detail


def test_in1out1_closed_surface_cases():
    r = verify_prop_in1out1(qg0_triangulation(2), 2)
    assert r.status == "Pass"
    assert "4b" in r.detail and "4c" in r.detail
    assert "4a" not in r.detail
    r1 = verify_prop_in1out1(qg0_triangulation(1), 1)
    assert r1.status == "Pass"
    assert "4a" in r1.detail


def test_in1out1_rejects_punctured_bordered():
    t, _ = add_puncture_on_arc(polygon_fan_triangulation(5), 0)
    with pytest.raises(UnsupportedSurface):
        verify_prop_in1out1(t, 1)


def test_theorem_const_closed_and_bordered():
    r = verify_theorem_const(1, 0, walk_steps=500, seed=0)
    assert r.status == "Pass"
    assert "1 classes, all 6 arrows" in r.detail
    assert "degree profile constant" in r.detail
    r = verify_theorem_const(1, 1, walk_steps=500, seed=0)
    assert r.status == "Pass"
    assert "all 7 arrows" in r.detail


def test_theorem_const_bfs_only():
    r = verify_theorem_const(2, 0, walk_steps=0)
    assert r.status == "Pass"
    assert "walk" not in r.detail


@pytest.mark.parametrize("name,fragment", [
    ("X7", "2 classes"),
    ("X6", "5 classes"),
    ("E6", "->"),
    ("E6_11", "[1, 2]"),
])
def test_exceptional_details(name, fragment):
    r = verify_exceptional(name)
    assert r.status == "Pass"
    assert fragment in r.detail


def test_exceptional_x_spectra():
    r7 = verify_exceptional("X7")
    assert "[12, 15]" in r7.detail
    r6 = verify_exceptional("X6")
    assert "9" in r6.detail and "11" in r6.detail


def test_lemma_addp_pass():
    r = verify_lemma_addp(polygon_fan_triangulation(5), 0)
    assert r.status == "Pass"
    r = verify_lemma_addp(qg0_triangulation(1), 0)
    assert r.status == "Pass"


def test_lemma_addb_pass():
    t = polygon_fan_triangulation(5)
    r = verify_lemma_addb(t, has_spade_triangle(t))
    assert r.status == "Pass"
    assert "retained" in r.detail


def test_corollary_pass_and_guard():
    assert verify_corollary(200).status == "Pass"
    with pytest.raises(ValueError):
        verify_corollary(1)


def test_an_embedding_sampled_label():
    r = verify_an_embedding(1, seed=0, samples=5)
    assert r.status == "Pass"
    assert "sampled" in r.detail
    with pytest.raises(ValueError):
        verify_an_embedding(4)


def test_standard_battery_ids_unique():
    ids = [cid for cid, _ in standard_claims()]
    assert len(ids) == len(set(ids))
    assert "exceptional/X7" in ids
    assert "theorem-const/2-0" in ids


def test_run_claims_family_filter():
    results = run_claims(["an-embedding"], seed=0)
    assert [r.claim_id for r in results] == [
        "an-embedding/1", "an-embedding/2", "an-embedding/3"
    ]
    assert all(r.status == "Pass" for r in results)


def test_run_claims_exact_id():
    results = run_claims(["exceptional/X7"])
    assert len(results) == 1
    assert results[0].claim_id == "exceptional/X7"


def test_run_claims_rejects_unknown():
    with pytest.raises(ValueError):
        run_claims(["exceptional/Z9"])


def test_report_is_bare_json_array():
    results = run_claims(["corollary/1000"])
    payload = json.loads(report_to_json(results))
    assert isinstance(payload, list)
    assert payload[0]["claim_id"] == "corollary/1000"
    assert payload[0]["status"] == "Pass"
    assert "counterexample" not in payload[0]


def test_report_keeps_counterexample_on_fail():
    fake = ClaimResult("demo", "Fail", "broke", {"vertex": 3})
    payload = json.loads(report_to_json([fake]))
    assert payload[0]["counterexample"] == {"vertex": 3}
    assert has_failure([fake])
    assert not has_failure(run_claims(["corollary/1000"]))
