import json

import pytest

from kronq.cli import main

GOLDEN_LEN4 = "tests/golden/catalog_n3_q2_len4.csv"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def make_file(capsys, tmp_path, name, *argv):
    path = tmp_path / name
    code = main(list(argv) + ["--out", str(path)])
    capsys.readouterr()
    assert code == 0
    return str(path)


def test_make_projective(capsys):
    code, out = run(capsys, "make", "p", "2")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 3 and data["q"] == 2
    assert data["dim"] == [1, 3]


def test_make_embedded_regular(capsys):
    code, out = run(capsys, "make", "regular2k", "2", "0")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == [2, 2]
    assert len(data["maps"]) == 3
    assert data["maps"][2] == [[0, 0], [0, 0]]
    code, out = run(capsys, "make", "regular2k", "2", "inf")
    assert json.loads(out)["maps"][1] == [[1, 0], [0, 1]]


def test_make_flat_when_two_arrows(capsys):
    code, out = run(capsys, "make", "preproj2k", "1", "--n", "2")
    data = json.loads(out)
    assert data["n"] == 2 and data["dim"] == [1, 2]
    code, out = run(capsys, "make", "q", "1")
    assert json.loads(out)["dim"] == [3, 1]


def test_make_rejects_bad_params(capsys):
    assert main(["make", "p"]) == 2
    assert main(["make", "simple", "3"]) == 2
    assert main(["make", "regular2k", "2"]) == 2


def test_measure_command(capsys, tmp_path):
    p2 = make_file(capsys, tmp_path, "p2.json", "make", "p", "2")
    code, out = run(capsys, "measure", p2)
    assert code == 0
    assert out.splitlines()[0] == "{1,4}"
    code, out = run(capsys, "measure", p2, "--chain", "--gr-submodules", "--oracle")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "{1,4}"
    assert "oracle agrees: {1,4}" in lines
    assert "  length 1: dims (0,1)" in lines
    assert "  length 4: dims (1,3)" in lines
    assert any(line.startswith("  gr submodule dims (0,1)") for line in lines)


def test_measure_missing_file(capsys):
    assert main(["measure", "/nonexistent/m.json"]) == 2


def test_measure_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["measure", str(bad)]) == 2
    half = tmp_path / "half.json"
    half.write_text('{"n": 3, "q": 2}')
    assert main(["measure", str(half)]) == 2


def test_compare_command(capsys):
    assert run(capsys, "compare", "{1,2,4}", "{1,2,3}") == (0, "<\n")
    assert run(capsys, "compare", "{1}", "{1}") == (0, "=\n")
    assert run(capsys, "compare", "{1,4}", "{1,2}") == (0, "<\n")
    assert run(capsys, "compare", "{1,2,3}", "{1,2,4}") == (0, ">\n")
    assert main(["compare", "{1,2", "{1}"]) == 2
    assert main(["compare", "{2,1}", "{1}"]) == 2


def test_tau_command(capsys, tmp_path):
    one = make_file(capsys, tmp_path, "r1.json", "make", "regular2k", "1", "0")
    code, out = run(capsys, "tau", one)
    assert code == 0
    assert json.loads(out)["dim"] == [5, 2]
    code, _ = run(capsys, "tau", one, "--inverse")
    assert code == 0
    p2 = make_file(capsys, tmp_path, "p2.json", "make", "p", "2")
    assert main(["tau", p2]) == 4


def test_hom_command(capsys, tmp_path):
    p1 = make_file(capsys, tmp_path, "p1.json", "make", "p", "1")
    p2 = make_file(capsys, tmp_path, "p2.json", "make", "p", "2")
    code, out = run(capsys, "hom", p1, p2)
    assert code == 0
    assert out == "hom=3 ext=0 euler=3 OK\n"
    q0 = make_file(capsys, tmp_path, "q0.json", "make", "q", "0")
    code, out = run(capsys, "hom", q0, p1)
    assert code == 0
    assert out == "hom=0 ext=3 euler=-3 OK\n"


def test_scan_matches_golden(capsys, tmp_path):
    out_path = tmp_path / "cat.csv"
    code, _ = run(capsys, "scan", "--max-length", "4", "--out", str(out_path))
    assert code == 0
    with open(GOLDEN_LEN4, "rb") as fh:
        golden = fh.read()
    assert out_path.read_bytes() == golden
    again = tmp_path / "cat2.csv"
    code, _ = run(capsys, "scan", "--max-length", "4", "--out", str(again))
    assert again.read_bytes() == golden


def test_scan_sampled_deterministic(capsys):
    code, first = run(capsys, "scan", "--mode", "sampled", "--max-length", "3", "--samples", "6")
    assert code == 0
    code, second = run(capsys, "scan", "--mode", "sampled", "--max-length", "3", "--samples", "6")
    assert first == second
    assert "sampled" in first


def test_scan_families_mode(capsys):
    code, out = run(capsys, "scan", "--mode", "families", "--max-length", "6")
    assert code == 0
    assert "families" in out
    assert "{1,2,4,5}" in out


def test_gapscan_command(capsys):
    code, out = run(
        capsys, "gapscan", "--m", "1", "--max-length", "5", "--family-length", "5"
    )
    assert code == 0
    report = json.loads(out)
    assert report["target"] == "{1,2,3}"
    assert report["unwitnessed"] == []
    assert report["witnesses"]["{1,2,4}"] == "{1,2,4,5}"


def test_verify_command(capsys):
    code, out = run(capsys, "verify", "arithmetic")
    assert code == 0
    assert out.startswith("arithmetic: pass")
    with pytest.raises(SystemExit):
        main(["verify", "not-a-suite"])
