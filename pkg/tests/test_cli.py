"""CLI surface: output schemas, exit codes, byte stability, file input."""

import json

import pytest

from twistspin.cli import main

# the trefoil drawn with one extra kink (4 crossings); counts must match the
# catalog trefoil because they are group invariants
KINKED_TREFOIL = """\
# standard diagram plus one kink on the arc between two crossings
name: trefoil-kinked
generators: 4
crossing: 1 2 3
crossing: 2 3 1
crossing: 3 4 2
crossing: 4 1 4
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_trefoil_sl2z3(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--knot", "trefoil", "--m", "2", "--n", "1", "--group", "sl2z3"
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 6
    assert data["beta"] == 1
    assert data["h_image"] == "[[-1,0],[0,-1]]"
    assert data["witnesses_complete"]
    assert len(data["witnesses"]) == 6
    assert data["runtime_ms"] is None


def test_count_dihedral_counts_raw_homomorphisms(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--knot", "trefoil", "--m", "3", "--n", "1", "--group", "d2k:3"
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3  # exhaustive count; the published closed form halves orbits
    assert data["h_image"] == "r^3"


def test_count_m_zero(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--knot", "unknot", "--m", "0", "--n", "1", "--group", "d2k:4"
    )
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_count_unknown_knot_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "count", "--knot", "7_4", "--m", "2", "--n", "1", "--group", "sl2z3"
    )
    assert code == 2
    assert "unknown knot" in err


def test_count_invalid_mn_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "count", "--knot", "trefoil", "--m", "4", "--n", "2", "--group", "sl2z3"
    )
    assert code == 2
    assert "coprime" in err


def test_count_oracle_guard_exit_3(capsys):
    code, _, err = run_cli(
        capsys,
        "count", "--knot", "6_1", "--m", "2", "--n", "1",
        "--group", "sl2z3", "--engine", "oracle",
    )
    assert code == 3
    assert "backtracking" in err


def test_count_explicit_h_image(capsys):
    code, out, _ = run_cli(
        capsys,
        "count", "--knot", "trefoil", "--m", "2", "--n", "1",
        "--group", "sl2z3", "--h-image", "[[1,0],[0,1]]",
    )
    assert code == 0
    data = json.loads(out)
    assert data["h_image"] == "[[1,0],[0,1]]"
    # h -> I forces x^2 = 1 on meridians; the only involutions are +-I, both
    # central, so exactly the two constant assignments survive
    assert data["count"] == 2
    assert {w["x"][0] for w in data["witnesses"]} == {"[[1,0],[0,1]]", "[[-1,0],[0,-1]]"}


def test_count_bad_h_image_exit_2(capsys):
    code, _, err = run_cli(
        capsys,
        "count", "--knot", "trefoil", "--m", "2", "--n", "1",
        "--group", "sl2z3", "--h-image", "r^3",
    )
    assert code == 2


def test_enumerate_dumps_all_witnesses(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--knot", "trefoil", "--m", "2", "--n", "1", "--group", "sl2z3"
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == len(data["witnesses"]) == 6
    for w in data["witnesses"]:
        assert len(set(w["x"])) == 1  # all meridian images equal


def test_enumerate_unknot_m1(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--knot", "unknot", "--m", "1", "--n", "1", "--group", "d2k:3"
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1
    assert data["witnesses"][0]["x"] == ["r^0"]
    assert data["witnesses"][0]["h"] == "r^3"


def test_catalog_list(capsys):
    code, out, _ = run_cli(capsys, "catalog", "list")
    assert code == 0
    data = json.loads(out)
    names = [e["name"] for e in data["knots"]]
    assert len(names) >= 6
    assert "trefoil" in names and "figure-eight" in names


def test_catalog_show_roundtrips(capsys):
    code, out, _ = run_cli(capsys, "catalog", "show", "--knot", "trefoil")
    assert code == 0
    assert out.startswith("name: trefoil\ngenerators: 3\n")
    from twistspin.presentations import parse_knot_file, serialize_knot

    assert serialize_knot(parse_knot_file(out)) == out


def test_knot_file_input_and_diagram_independence(capsys, tmp_path):
    path = tmp_path / "kinked.knot"
    path.write_text(KINKED_TREFOIL, encoding="utf-8")
    for group, m in (("sl2z3", 2), ("d2k:3", 3), ("d2k:6", 6)):
        code, out_file, _ = run_cli(
            capsys, "count", "--knot", str(path), "--m", str(m), "--n", "1",
            "--group", group, "--witnesses", "0",
        )
        assert code == 0
        code, out_cat, _ = run_cli(
            capsys, "count", "--knot", "trefoil", "--m", str(m), "--n", "1",
            "--group", group, "--witnesses", "0",
        )
        assert code == 0
        assert json.loads(out_file)["count"] == json.loads(out_cat)["count"]


def test_bad_knot_file_exit_2(capsys, tmp_path):
    path = tmp_path / "broken.knot"
    path.write_text("generators: 2\ncrossing: 0 1 2\n", encoding="utf-8")
    code, _, err = run_cli(
        capsys, "count", "--knot", str(path), "--m", "2", "--n", "1", "--group", "sl2z3"
    )
    assert code == 2
    assert "line 2" in err


def test_verify_lemmas_exit_0(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "lemmas")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["overall"] == "pass"
    assert data["summary"]["fail"] == 0
    assert data["summary"]["discrepancy_documented"] == 2


def test_verify_bad_range_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--m-range", "2..-2")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--m-range", "banana")
    assert code == 2


def test_verify_unknown_knot_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--knots", "trefoil,7_9")
    assert code == 2


def test_verify_knot_subset(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--suite", "theorems", "--m-range=-2..2", "--k-range", "1..2",
        "--knots", "trefoil,unknot",
    )
    assert code == 0
    data = json.loads(out)
    assert data["parameters"]["knots"] == ["trefoil", "unknot"]


def test_distinguish_witness(capsys):
    code, out, _ = run_cli(capsys, "distinguish", "--m1", "2", "--m2", "3")
    assert code == 0
    data = json.loads(out)
    assert data["result"] == "witness"
    assert data["witness"] == {"k": 1, "count1": 0, "count2": 1}


def test_distinguish_identical(capsys):
    code, out, _ = run_cli(capsys, "distinguish", "--m1", "5", "--m2", "5")
    assert code == 0
    assert json.loads(out)["result"] == "indistinguishable"


def test_distinguish_spun_vs_trivial(capsys):
    code, out, _ = run_cli(capsys, "distinguish", "--m1", "0", "--m2", "1", "--kmax", "1")
    assert code == 0
    assert json.loads(out)["witness"] == {"k": 1, "count1": 0, "count2": 1}


def test_byte_stable_outputs(capsys):
    args = ("count", "--knot", "5_2", "--m", "6", "--n", "1", "--group", "d2k:6")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    vargs = ("verify", "--suite", "lemmas")
    _, v1, _ = run_cli(capsys, *vargs)
    _, v2, _ = run_cli(capsys, *vargs)
    assert v1 == v2


def test_byte_stable_across_processes_and_hash_seeds():
    import os
    import subprocess
    import sys

    outs = []
    for seed in ("0", "424242"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [sys.executable, "-m", "twistspin.cli", "verify", "--suite", "lemmas"],
            capture_output=True,
            env=env,
            check=True,
        )
        outs.append(proc.stdout)
    assert outs[0] == outs[1]


def test_timing_flag_adds_runtimes(capsys):
    code, out, _ = run_cli(
        capsys,
        "count", "--knot", "trefoil", "--m", "2", "--n", "1",
        "--group", "sl2z3", "--timing",
    )
    assert code == 0
    assert isinstance(json.loads(out)["runtime_ms"], float)


def test_pretty_outputs_are_text(capsys):
    code, out, _ = run_cli(
        capsys,
        "count", "--knot", "trefoil", "--m", "2", "--n", "1",
        "--group", "sl2z3", "--pretty",
    )
    assert code == 0
    assert "count:    6" in out
    code, out, _ = run_cli(capsys, "verify", "--suite", "lemmas", "--pretty")
    assert code == 0
    assert "overall: pass" in out
