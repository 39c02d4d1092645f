import json

import pytest

from qgl3.cli import main, parse_weight
from qgl3.lattice import Weight


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_weight():
    assert parse_weight("3,3") == Weight(3, 3)
    assert parse_weight("-1,0") == Weight(-1, 0)
    assert parse_weight("4,1,0", gl3=True) == Weight(3, 1)
    with pytest.raises(ValueError):
        parse_weight("1,2,3")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--l", "3", "3,3")
    assert code == 0
    assert "down-alcove" in out
    assert "(1,1)" in out and "(0,0)" in out
    code, out, _ = run(capsys, "classify", "--l", "2", "1,1")
    assert code == 0 and "vertex" in out


def test_classify_rejects_non_dominant(capsys):
    code, _, err = run(capsys, "classify", "--l", "3", "--", "-1,0")
    assert code == 2
    assert "dominant" in err


def test_char_json(capsys):
    code, out, _ = run(capsys, "char", "--l", "3", "--format", "json", "1,1")
    assert code == 0
    triples = json.loads(out)
    assert sum(c for _, _, c in triples) == 8


def test_decomp_json(capsys):
    code, out, _ = run(capsys, "decomp", "--l", "3", "--format", "json", "3,3")
    assert code == 0
    data = json.loads(out)
    assert data["case"] == "v"
    assert len(data["factors"]) == 9
    assert data["nonzero"].count(False) == 2


def test_gl3_flag(capsys):
    code, out, _ = run(capsys, "decomp", "--l", "3", "--gl3", "--format", "json", "6,3,0")
    assert code == 0
    assert json.loads(out)["lambda"] == [3, 3]


def test_zhat_outputs(capsys):
    code, out, _ = run(capsys, "zhat", "--l", "3", "3,3", "--structure", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and out.count("->") == 13
    code, out, _ = run(capsys, "zhat", "--l", "2", "1,0", "--char", "--format", "json")
    assert code == 0
    assert sum(c for _, _, c in json.loads(out)) == 8
    code, out, _ = run(capsys, "zhat", "--l", "2", "1,0", "--factors", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 4


def test_lfilt_dot(capsys):
    code, out, _ = run(capsys, "lfilt", "--l", "3", "3,3", "--format", "dot")
    assert code == 0
    assert out.count("label=") == 7


def test_dot_rejected_for_non_graph(capsys):
    code, _, err = run(capsys, "char", "--l", "3", "--format", "dot", "1,1")
    assert code == 2 and "dot" in err


def test_ext_levels(capsys):
    code, out, _ = run(capsys, "ext", "--l", "5", "--level", "g1", "1,2", "4,1")
    assert code == 0 and out.strip() == "nabla(0,1)^F"
    code, out, _ = run(capsys, "ext", "--l", "3", "--level", "g", "0,0", "3,3")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(
        capsys, "ext", "--l", "3", "--level", "g1b", "--mu", "3,3", "4,1", "3,3"
    )
    assert code == 0 and out.strip() == "1"
    code, _, err = run(capsys, "ext", "--l", "3", "--level", "g1b", "1,1", "3,3")
    assert code == 2 and "--mu" in err


def test_hom(capsys):
    code, out, _ = run(capsys, "hom", "--l", "3", "--format", "json", "3,3", "1,1")
    assert code == 0
    data = json.loads(out)
    assert data["witness"] == {"beta": "rho", "m": 2, "e": 0}
    code, out, _ = run(capsys, "hom", "--l", "3", "3,3", "3,3")
    assert code == 0 and "no witness" in out


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "dimension,zhat", "--l", "2", "--box", "2")
    assert code == 0
    assert "dimension" in out and "ok" in out


def test_verify_jobs(capsys):
    code, out, _ = run(
        capsys, "verify", "--suites", "decomposition", "--l", "2,3", "--box", "2", "--jobs", "2"
    )
    assert code == 0 and "decomposition" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suites", "unknown", "--l", "2")
    assert code == 2 and "unknown" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qgl3 import cli
    from qgl3.verify import VerifyReport

    def fake(name, l_values, box, stream=None, jobs=1):
        report = VerifyReport(name, cases_run=1)
        report.failures.append(("case", "identity", "observed"))
        return report

    monkeypatch.setattr(cli, "run_suite", fake)
    code, out, _ = run(capsys, "verify", "--suites", "dimension", "--l", "2")
    assert code == 1 and "1 failures" in out


def test_invalid_l_and_p(capsys):
    code, _, err = run(capsys, "classify", "--l", "1", "0,0")
    assert code == 2 and "l >= 2" in err
    code, _, err = run(capsys, "ext", "--l", "3", "--p", "4", "--level", "g", "0,0", "3,3")
    assert code == 2 and "prime" in err


def test_cache_dir_roundtrip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QGL3_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "char", "--l", "3", "4,1")
    assert code == 0
    cache_file = tmp_path / "simple-chars-l3.json"
    assert cache_file.exists()
    data = json.loads(cache_file.read_text())
    assert data["l"] == 3
    assert "4,1" not in data["entries"]  # keys are restricted weights only
    assert "1,1" in data["entries"]
    # a fresh run loads the cache without error
    code, _, _ = run(capsys, "decomp", "--l", "3", "3,3")
    assert code == 0
