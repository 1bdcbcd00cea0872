"""Smoke tests for the _boxball extension and the boxball CLI."""

import json
import os
import subprocess

import pytest

import boxball as bb

SAMPLE = "0010011011"


def test_parse_and_evolve():
    p = bb.parse_state(SAMPLE)
    assert p.text == "10011011"
    assert p.offset == 2
    assert p.ball_count == 5
    q = bb.evolve_tts(p)
    assert q.text == "1000100111"
    assert q.offset == 3
    assert q == bb.parse_state("0001000100111")


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        bb.parse_state("10x1")


def test_matching_and_stack_permutation():
    seq = bb.match_stack(bb.parse_state(SAMPLE))
    assert seq.tokens == "()0(()(()))"
    assert bb.stack_permutation(seq) == [1, 3, 5, 4, 2]
    assert seq.depth_histogram() == [3, 1, 1]
    assert seq == bb.match_rounds(bb.parse_state(SAMPLE))
    assert [p.depth for p in seq.pairs] == [1, 3, 1, 2, 1]


def test_insertion_and_chain_invariants():
    word = [3, 1, 2, 1, 4, 3]
    assert bb.p_shape(word) == [3, 2, 1]
    assert [bb.greene_i(word, k) for k in (1, 2, 3, 4)] == [3, 5, 6, 6]
    assert bb.lambda_of(word) == [3, 2, 1]
    assert bb.lambda_prime_of(word) == bb.transpose(bb.lambda_of(word))
    assert bb.p_symbol([1, 3, 5, 4, 2]) == [[1, 2, 4], [3], [5]]


def test_walk_reflection_matches_evolution():
    p = bb.parse_state(SAMPLE)
    walk = bb.to_walk(bb.match_stack(p))
    assert walk.steps == "URRUURUURRR"
    reflected = bb.evolve_reflect(walk)
    assert bb.walk_to_state(reflected) == bb.evolve_tts(p)
    assert bb.same_walk(
        bb.delete_convex(walk), bb.delete_concave(walk)
    )


def test_energy_profile():
    rep = bb.energy_profile(bb.parse_state(SAMPLE), 4)
    assert rep.values == {1: 3, 2: 4, 3: 5, 4: 5}
    assert rep.e_infinity == 5
    assert rep.sites[1] == [3, 7, 10]
    r = bb.transfer(bb.parse_state("11"), 1)
    assert (r.next.text, r.next.offset, r.energy) == ("11", 1, 1)


def test_verification_suite_passes_and_catches_mutations():
    results = bb.run_verification(count=30, steps=5, seed=11)
    assert bb.all_passed(results)
    bad = bb.run_verification(count=10, steps=3, corrupt_r_step=True)
    assert not bb.all_passed(bad)
    assert any("state=" in r.detail for r in bad if not r.passed)


CLI = os.environ.get("BOXBALL_CLI")
needs_cli = pytest.mark.skipif(CLI is None, reason="BOXBALL_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@needs_cli
def test_cli_simulate_json():
    proc = run_cli("simulate", "--state", SAMPLE, "--steps", "1", "--format", "json")
    assert proc.returncode == 0
    runs = json.loads(proc.stdout)["runs"]
    assert runs[0]["states"][1] == {"t": 1, "text": "1000100111", "offset": 3}


@needs_cli
def test_cli_invariants_and_verify_pass():
    proc = run_cli("invariants", "--state", SAMPLE, "--steps", "8", "--format", "json")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)["reports"][0]
    assert all(v["passed"] for v in report["verdicts"])

    proc = run_cli("verify", "--count", "25", "--steps", "5")
    assert proc.returncode == 0


@needs_cli
def test_cli_exit_codes():
    usage = run_cli("simulate", "--state", "012")
    assert usage.returncode == 2
    unknown = run_cli("frobnicate")
    assert unknown.returncode == 2
    corrupted = run_cli("verify", "--count", "5", "--steps", "2", "--corrupt-r-step")
    assert corrupted.returncode == 1


@needs_cli
def test_cli_render():
    proc = run_cli("render", "--state", SAMPLE)
    assert proc.returncode == 0
    assert "()0(()(()))" in proc.stdout
    as_json = json.loads(run_cli("render", "--state", SAMPLE, "--format", "json").stdout)
    assert as_json["poset"]["points"] == [[1, 1], [2, 3], [3, 5], [4, 4], [5, 2]]
    assert [p["depth"] for p in as_json["parens"]["pairs"]] == [1, 3, 1, 2, 1]


@needs_cli
def test_cli_vacuum_rows():
    proc = run_cli("simulate", "--state", "0000", "--steps", "5")
    assert proc.returncode == 0
    rows = [line for line in proc.stdout.splitlines() if line.startswith("t+")]
    assert len(rows) == 6
    assert all("(vacuum)" in row for row in rows)
