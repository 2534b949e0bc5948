"""End-to-end command tests, all in-process through cli.run."""
from __future__ import annotations

import io
import json

import pytest

from quivermut import (
    are_isomorphic,
    arrow_count,
    degrees,
    markov_quiver,
    mutate,
    quiver_from_arrows,
    quiver_from_json,
    quiver_to_json,
)
from quivermut.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def quiver_file(tmp_path, q, name="q.json"):
    path = tmp_path / name
    path.write_text(quiver_to_json(q))
    return str(path)


# --- gen ----------------------------------------------------------------

def test_gen_markov(capsys):
    code, out, _ = invoke(capsys, "gen", "markov")
    assert code == 0
    assert quiver_from_json(out) == markov_quiver()


def test_gen_with_params(capsys):
    code, out, _ = invoke(capsys, "gen", "qgb", "--g", "0", "--b", "2")
    assert code == 0
    q = quiver_from_json(out)
    assert q.n == 2 and arrow_count(q) == 2


def test_gen_exceptional(capsys):
    code, out, _ = invoke(capsys, "gen", "exceptional:X7")
    assert code == 0
    assert quiver_from_json(out).n == 7


def test_gen_dot(capsys):
    code, out, _ = invoke(capsys, "gen", "an", "--n", "2", "--dot")
    assert code == 0
    assert "digraph" in out and "v0 -> v1;" in out


def test_gen_missing_param_is_usage_error(capsys):
    code, _, err = invoke(capsys, "gen", "qg0")
    assert code == 2
    assert "--g" in err


def test_gen_unknown_name_is_usage_error(capsys):
    code, _, _ = invoke(capsys, "gen", "nope")
    assert code == 2


def test_gen_unknown_exceptional_is_computation_error(capsys):
    code, _, _ = invoke(capsys, "gen", "exceptional:NOPE")
    assert code == 1


# --- mutate -------------------------------------------------------------

def test_mutate_from_file(tmp_path, capsys):
    src = quiver_file(tmp_path, markov_quiver())
    code, out, _ = invoke(capsys, "mutate", src, "--at", "0")
    assert code == 0
    assert quiver_from_json(out) == mutate(markov_quiver(), 0)


def test_mutate_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(
        "sys.stdin", io.StringIO(quiver_to_json(markov_quiver()))
    )
    code, out, _ = invoke(capsys, "mutate", "-", "--at", "1")
    assert code == 0
    assert quiver_from_json(out) == mutate(markov_quiver(), 1)


def test_mutate_twice_is_identity_bytes(tmp_path, capsys):
    src = quiver_file(tmp_path, quiver_from_arrows(3, [(0, 1, 1), (1, 2, 2)]))
    code, out, _ = invoke(capsys, "mutate", src, "--at", "1", "--at", "1")
    assert code == 0
    assert out == (tmp_path / "q.json").read_text() + (
        "" if (tmp_path / "q.json").read_text().endswith("\n") else "\n"
    )


def test_mutate_seq(tmp_path, capsys):
    q = markov_quiver()
    src = quiver_file(tmp_path, q)
    code, out, _ = invoke(capsys, "mutate", src, "--seq", "0,1,0")
    assert code == 0
    want = mutate(mutate(mutate(q, 0), 1), 0)
    assert quiver_from_json(out) == want


def test_mutate_without_vertices_is_usage_error(tmp_path, capsys):
    src = quiver_file(tmp_path, markov_quiver())
    code, _, _ = invoke(capsys, "mutate", src)
    assert code == 2


def test_mutate_out_of_range_is_computation_error(tmp_path, capsys):
    src = quiver_file(tmp_path, markov_quiver())
    code, _, _ = invoke(capsys, "mutate", src, "--at", "7")
    assert code == 1


def test_mutate_bad_seq_token(tmp_path, capsys):
    src = quiver_file(tmp_path, markov_quiver())
    code, _, _ = invoke(capsys, "mutate", src, "--seq", "0,x")
    assert code == 2


def test_mutate_missing_file(capsys):
    code, _, _ = invoke(capsys, "mutate", "/nonexistent/q.json", "--at", "0")
    assert code == 1


# --- class / walk -------------------------------------------------------

def test_class_x7_has_two_entries(capsys, monkeypatch):
    code, out, _ = invoke(capsys, "gen", "exceptional:X7")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = invoke(capsys, "class", "-")
    assert code == 0
    payload = json.loads(out)
    assert payload["format"] == "classreport-v1"
    assert len(payload["representatives"]) == 2
    assert sorted(set(payload["arrow_counts"])) == [12, 15]


def test_class_respects_budget(tmp_path, capsys):
    src = quiver_file(tmp_path, quiver_from_arrows(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]))
    code, out, _ = invoke(capsys, "class", src, "--max-classes", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "TruncatedAtBudget"


def test_walk_report(tmp_path, capsys):
    src = quiver_file(tmp_path, markov_quiver())
    code, out, _ = invoke(capsys, "walk", src, "--steps", "50", "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["format"] == "walkreport-v1"
    assert payload["steps"] == 50 and payload["seed"] == 7
    assert payload["arrow_count_min"] == payload["arrow_count_max"] == 6


def test_walk_deterministic(tmp_path, capsys):
    src = quiver_file(tmp_path, quiver_from_arrows(3, [(0, 1, 1), (1, 2, 1)]))
    _, out1, _ = invoke(capsys, "walk", src, "--steps", "200", "--seed", "3")
    _, out2, _ = invoke(capsys, "walk", src, "--steps", "200", "--seed", "3")
    assert out1 == out2


# --- mutate example from the reference pipelines ------------------------

def test_qg0_mutate_stays_markov_like(tmp_path, capsys):
    code, out, _ = invoke(capsys, "gen", "qg0", "--g", "1")
    q_text = out
    path = tmp_path / "g1.json"
    path.write_text(q_text)
    code, out, _ = invoke(capsys, "mutate", str(path), "--at", "0")
    assert code == 0
    assert are_isomorphic(quiver_from_json(out), markov_quiver())


def test_an_mutate_middle_gives_cycle(tmp_path, capsys):
    code, out, _ = invoke(capsys, "gen", "an", "--n", "3")
    path = tmp_path / "a3.json"
    path.write_text(out)
    code, out, _ = invoke(capsys, "mutate", str(path), "--at", "1")
    assert code == 0
    q = quiver_from_json(out)
    assert arrow_count(q) == 3
    assert all(degrees(q, v) == (1, 1) for v in range(3))


# --- tri subcommands ----------------------------------------------------

def test_tri_gen_flip_quiver_pipeline(tmp_path, capsys):
    code, out, _ = invoke(capsys, "tri", "gen", "polygon", "--m", "6")
    assert code == 0
    tri_path = tmp_path / "t.json"
    tri_path.write_text(out)

    code, out, _ = invoke(capsys, "tri", "flip", str(tri_path), "--arc", "1")
    assert code == 0
    flipped = tmp_path / "f.json"
    flipped.write_text(out)

    code, out, _ = invoke(capsys, "tri", "quiver", str(flipped))
    assert code == 0
    assert quiver_from_json(out).n == 3


def test_tri_classify_all(tmp_path, capsys):
    code, out, _ = invoke(capsys, "tri", "gen", "polygon", "--m", "6")
    tri_path = tmp_path / "t.json"
    tri_path.write_text(out)
    code, out, _ = invoke(capsys, "tri", "classify", str(tri_path))
    assert code == 0
    assert json.loads(out)["cases"] == {"0": "1", "1": "2c", "2": "1"}


def test_tri_classify_single_arc(tmp_path, capsys):
    code, out, _ = invoke(capsys, "tri", "gen", "qg0", "--g", "1")
    tri_path = tmp_path / "t.json"
    tri_path.write_text(out)
    code, out, _ = invoke(capsys, "tri", "classify", str(tri_path), "--arc", "0")
    assert code == 0
    assert json.loads(out) == {"arc": 0, "case": "4a"}


def test_tri_addp_notes_new_arc_on_stderr(tmp_path, capsys):
    code, out, _ = invoke(capsys, "tri", "gen", "polygon", "--m", "5")
    tri_path = tmp_path / "t.json"
    tri_path.write_text(out)
    code, out, err = invoke(capsys, "tri", "addp", str(tri_path), "--arc", "0")
    assert code == 0
    assert err.startswith("new arc ")
    payload = json.loads(out)
    assert payload["format"] == "tri-v1"
    assert payload["surface"]["punctures"] == 1


def test_tri_addb_roundtrip(tmp_path, capsys):
    code, out, _ = invoke(capsys, "tri", "gen", "qgb", "--g", "1", "--b", "1")
    tri_path = tmp_path / "t.json"
    tri_path.write_text(out)
    code, out, err = invoke(capsys, "tri", "addb", str(tri_path), "--triangle", "0")
    if code != 0:
        # triangle 0 may have no boundary side in this layout; find one
        code2, out2, _ = invoke(capsys, "tri", "classify", str(tri_path))
        pytest.fail(f"addb failed: {err} (cases {out2})")
    assert err.startswith("new arc ")


def test_tri_flip_boundary_is_computation_error(tmp_path, capsys):
    code, out, _ = invoke(capsys, "tri", "gen", "polygon", "--m", "5")
    tri_path = tmp_path / "t.json"
    tri_path.write_text(out)
    code, _, _ = invoke(capsys, "tri", "flip", str(tri_path), "--arc", "4")
    assert code == 1


# --- verify -------------------------------------------------------------

def test_verify_subset(capsys):
    code, out, _ = invoke(capsys, "verify", "--claims", "corollary/1000")
    assert code == 0
    payload = json.loads(out)
    assert [r["claim_id"] for r in payload] == ["corollary/1000"]
    assert payload[0]["status"] == "Pass"


def test_verify_family_and_seed(capsys):
    code, out, _ = invoke(capsys, "verify", "--claims", "an-embedding", "--seed", "5")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 3
    assert all("seed 5" in r["detail"] for r in payload)


def test_verify_unknown_claim_is_usage_error(capsys):
    code, _, err = invoke(capsys, "verify", "--claims", "bogus/claim")
    assert code == 2
    assert "unknown claim" in err


# --- top-level plumbing -------------------------------------------------

def test_no_command_is_usage_error(capsys):
    code, _, _ = invoke(capsys)
    assert code == 2


def test_unknown_command_is_usage_error(capsys):
    code, _, _ = invoke(capsys, "frobnicate")
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0
    assert "gen" in out and "verify" in out


def test_bad_json_is_computation_error(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, _, _ = invoke(capsys, "mutate", str(path), "--at", "0")
    assert code == 1
