import json
import os
import re
import subprocess

import pytest

CLI = os.environ.get("SUPERGRAPHS_CLI", "build/tools/supergraphs")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_build_reduced_d14_dot_has_two_cliques():
    r = run("build", "--group", "D14", "--graph", "commuting", "--relation", "order",
            "--reduced", "--format", "dot")
    assert r.returncode == 0
    nodes = re.findall(r"^  (\d+) \[label=\"\d+ \(o=(\d+)\)\"\];$", r.stdout, re.M)
    edges = re.findall(r"^  (\d+) -- (\d+);$", r.stdout, re.M)
    by_order = {}
    for node, order in nodes:
        by_order.setdefault(order, set()).add(node)
    assert {o: len(v) for o, v in by_order.items()} == {"7": 6, "2": 7}
    assert len(edges) == 15 + 21
    for u, v in edges:
        assert any(u in block and v in block for block in by_order.values())


def test_build_trivial_group():
    r = run("build", "--group", "Z1", "--graph", "power", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert len(doc["vertices"]) == 1
    assert doc["edges"] == []


def test_build_bits_output():
    r = run("build", "--group", "Z3", "--graph", "power", "--format", "bits")
    assert r.stdout == "011\n101\n110\n"


def test_budget_exceeded_exit_code():
    r = run("build", "--group", "S9", "--graph", "power", "--relation", "equality")
    assert r.returncode == 3
    assert "budget" in r.stderr


def test_usage_errors_exit_code():
    assert run("build").returncode == 2
    assert run("build", "--group", "D7").returncode == 2
    assert run("build", "--group", "Z4", "--relation", "similar").returncode == 2
    assert run("scan", "--family", "dihedral").returncode == 2


def test_corrupted_manifest(tmp_path):
    manifest = tmp_path / "catalog.txt"
    manifest.write_text("# groups\nZ6\nQ10\n")
    r = run("verify", "--catalog", str(manifest))
    assert r.returncode == 2
    assert "line 3" in r.stderr


def test_verify_single_group():
    r = run("verify", "--group", "Z6")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    (group,) = doc["groups"]
    pe = next(v for v in group["equality"] if v["pair"] == "P=Pe")
    assert pe["equal"] is False and pe["predicted"] is False and pe["consistent"]
    assert doc["mismatches"] == []


def test_verify_csv(tmp_path):
    out = tmp_path / "verdicts.csv"
    r = run("verify", "--group", "S3", "--group", "Q8", "--format", "csv", "--output", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "label,pair,equal,predicted,condition_name,theorem_id,consistent"
    assert len(lines) == 1 + 2 * 18


def test_verify_family_mismatch_is_reported():
    r = run("verify", "--group", "Z2", "--family-last", "6")
    assert r.returncode == 1
    assert "alternating6" in r.stderr


def test_spectrum():
    r = run("spectrum", "--family", "symmetric", "--n", "15")
    doc = json.loads(r.stdout)
    assert r.returncode == 0
    assert doc["connected"] is True and doc["diameter"] == 3
    assert doc["witness"]["T1"]
    d16 = json.loads(run("spectrum", "--group", "D16").stdout)
    assert d16["mu"] == [8] and d16["l"] == 8


def test_scan_symmetric():
    r = run("scan", "--family", "symmetric", "--from", "4", "--to", "20")
    assert r.returncode == 0
    rows = [line.split(",") for line in r.stdout.splitlines()[1:] if not line.startswith("#")]
    assert [int(row[1]) for row in rows if row[2] == "true"] == [9, 10, 15, 16]
    assert all(row[4] == "3" for row in rows if row[2] == "true")
    assert r.stdout.splitlines()[-1].startswith("# summary: rows=17 connected=4 counterexamples=none")


def test_scan_alternating_small_range_disconnected():
    r = run("scan", "--family", "alternating", "--from", "4", "--to", "9")
    rows = [line.split(",") for line in r.stdout.splitlines()[1:-1]]
    assert all(row[2] == "false" and row[4] == "inf" for row in rows)


def test_scan_witness_column_and_determinism():
    r = run("scan", "--family", "symmetric", "--from", "9", "--to", "9")
    row = r.stdout.splitlines()[1].split(",")
    assert row[5] and row[7]
    a = run("scan", "--family", "symmetric", "--from", "4", "--to", "60", "--workers", "1").stdout
    b = run("scan", "--family", "symmetric", "--from", "4", "--to", "60", "--workers", "3").stdout
    assert a == b


@pytest.mark.parametrize("bad", [["--from", "3"], ["--to", "61"], ["--from", "10", "--to", "5"]])
def test_scan_range_errors(bad):
    r = run("scan", "--family", "symmetric", *bad)
    assert r.returncode in (2, 3)
