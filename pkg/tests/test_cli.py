import subprocess
import sys

import pytest

from pfcond.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("family, expected", [("grid:4,4", "36"), ("aztec:3", "64"), ("complete:4", "3")])
def test_count_pfaffian(capsys, family, expected):
    code, out, _ = call(capsys, "count", "--family", family, "--method", "pfaffian")
    assert code == 0 and out.split() == [expected]


def test_count_enumerate_prints_value_and_count(capsys):
    code, out, _ = call(capsys, "count", "--family", "grid:3,4", "--method", "enumerate")
    assert code == 0 and out.splitlines() == ["11", "matchings 11"]


def test_methods_agree_with_random_weights(capsys):
    outs = [call(capsys, "count", "--family", "aztec:2", "--weights", "random:1,50", "--seed", "3",
                 "--method", m)[1].splitlines()[0] for m in ("enumerate", "pfaffian")]
    assert outs[0] == outs[1]


def test_count_nonplanar_needs_embedding(capsys):
    code, out, err = call(capsys, "count", "--family", "complete:6", "--method", "pfaffian")
    assert code == 2 and "embedding" in err
    code, out, _ = call(capsys, "count", "--family", "complete:6")
    assert code == 0 and out.splitlines()[0] == "15"


def test_gen_orient_verify_roundtrip(capsys, tmp_path):
    g, rot, ori = tmp_path / "g.graph", tmp_path / "g.rot", tmp_path / "g.orient"
    assert call(capsys, "gen", "--family", "grid:3,4", "--out", str(g), "--embedding-out", str(rot))[0] == 0
    assert call(capsys, "orient", "--in", str(g), "--embedding", str(rot), "--out", str(ori))[0] == 0
    for mode in ("faces", "all", "super"):
        code, out, _ = call(capsys, "verify-orientation", "--in", str(g), "--embedding", str(rot),
                            "--orient", str(ori), "--mode", mode)
        assert code == 0 and out.startswith("PASS")
    code, out, _ = call(capsys, "count", "--in", str(g), "--embedding", str(rot), "--method", "pfaffian")
    assert out.strip() == "11"


def test_flipped_orientation_fails(capsys, tmp_path):
    g, rot, ori = tmp_path / "g.graph", tmp_path / "g.rot", tmp_path / "g.orient"
    call(capsys, "gen", "--family", "grid:2,3", "--out", str(g), "--embedding-out", str(rot))
    call(capsys, "orient", "--in", str(g), "--embedding", str(rot), "--out", str(ori))
    lines = ori.read_text().splitlines()
    _, eid, t, h = lines[0].split()
    lines[0] = f"orient: {eid} {h} {t}"
    ori.write_text("\n".join(lines) + "\n")
    code, out, _ = call(capsys, "verify-orientation", "--in", str(g), "--embedding", str(rot),
                        "--orient", str(ori), "--mode", "faces")
    assert code == 1 and out.startswith("FAIL")


def test_orientation_for_wrong_graph(capsys, tmp_path):
    ori = tmp_path / "x.orient"
    ori.write_text("orient: 0 zz yy\n")
    code, _, err = call(capsys, "verify-orientation", "--family", "grid:2,2", "--orient", str(ori))
    assert code == 2


def test_pf_file(capsys, tmp_path):
    f = tmp_path / "a.skew"
    f.write_text("4\n1 2 2\n3 4 3\n1 3 1\n2 4 1/2\n")
    for method in ("definition", "eliminate", "crossings"):
        code, out, _ = call(capsys, "pf", "--file", str(f), "--method", method, "--det")
        assert code == 0 and out.splitlines() == ["11/2", "det 121/4"]


def test_pf_bad_file(capsys, tmp_path):
    f = tmp_path / "a.skew"
    f.write_text("3\n1 5 2\n")
    assert call(capsys, "pf", "--file", str(f))[0] == 2
    assert call(capsys, "pf", "--file", str(tmp_path / "missing"))[0] == 2


def test_verify_prints_summary(capsys):
    code, out, _ = call(capsys, "verify", "--identity", "ohta", "--trials", "5", "--seed", "3", "--size", "6")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6
    assert all(line.startswith("PASS ohta 3 t=") for line in lines[:5])
    assert lines[-1] == "SUMMARY ohta 5/5"


def test_verify_tanner_hundred_trials(capsys):
    code, out, _ = call(capsys, "verify", "--identity", "tanner", "--trials", "100", "--seed", "7", "--size", "8")
    lines = out.splitlines()
    assert code == 0
    assert sum(line.startswith("PASS ") for line in lines) == 100
    assert lines[-1] == "SUMMARY tanner 100/100"


def test_seed_env_default_and_determinism(capsys, monkeypatch):
    monkeypatch.setenv("PFCOND_SEED", "11")
    a = call(capsys, "verify", "--identity", "kuo", "--trials", "4", "--size", "9")[1]
    b = call(capsys, "verify", "--identity", "kuo", "--trials", "4", "--size", "9", "--seed", "11")[1]
    assert a == b and " 11 t=0;" in a
    monkeypatch.setenv("PFCOND_SEED", "eleven")
    assert call(capsys, "verify", "--identity", "kuo", "--trials", "1")[0] == 2


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["count"], ["count", "--family", "grid:2"], ["count", "--family", "grid:2,2", "--in", "x"],
    ["verify", "--identity", "nope"], ["verify", "--identity", "kuo", "--trials", "0"],
    ["verify", "--identity", "tanner", "--size", "99"], ["gen", "--family", "complete:5", "--embedding-out", "/dev/null"],
    ["count", "--family", "grid:2,2", "--weights", "random:9,1"],
])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pfcond", "count", "--family", "aztec:2", "--method", "pfaffian"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "8"
