"""CLI surface: JSON reports, exit codes, stability."""

import json

from hermlie.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verdict_example(capsys):
    code, doc = run_cli(capsys, "verdict", "--algebra", "k17",
                        "--params", "p=-1/2", "--structure", "example1")
    assert code == 0
    assert doc["skt"] is True and doc["kahler"] is False
    assert doc["H_pretty"] == "(1)*f123"


def test_poisson_example(capsys):
    code, doc = run_cli(capsys, "poisson", "--algebra", "k23",
                        "--params", "p=0", "--v", "1,0,0,0", "--s", "1")
    assert code == 0
    assert doc["dim"] == 1
    assert doc["generators"] == ["(1)*Z1^Z2"]


def test_poisson_with_beta(capsys):
    code, doc = run_cli(capsys, "poisson", "--algebra", "k23",
                        "--params", "p=0", "--v", "1,1/2,0,0", "--s", "1")
    assert code == 0
    assert doc["dim"] == 1
    assert "Z2^Z3" in doc["generators"][0]


def test_flow_example(capsys):
    code, doc = run_cli(capsys, "flow", "--algebra", "k17",
                        "--params", "p=-1/2", "--t-end", "2", "--dt", "1e-3")
    assert code == 0
    assert abs(doc["a_final"] - 0.5) < 1e-8
    assert abs(doc["closed_form_a"] - 0.5) < 1e-12


def test_flow_csv(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    code, doc = run_cli(capsys, "flow", "--algebra", "k17",
                        "--params", "p=-1/2", "--t-end", "0.01",
                        "--dt", "1e-3", "--csv", str(out))
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("t,a,v1")
    assert len(lines) == 12


def test_gk_verify(capsys):
    code, doc = run_cli(capsys, "gk-verify", "--algebra", "k8",
                        "--params", "p=1,q=-1/2,s=0")
    assert code == 0
    assert doc["valid"] and doc["split"]
    assert doc["canonical_generators_twisted_closed"] == [False, False]


def test_gk_search_small(capsys):
    code, doc = run_cli(capsys, "gk-search", "--v", "1,0,0,0", "--s", "1",
                        "--budget", "16", "--seed", "3")
    assert code == 0
    assert doc["contradiction"] is True
    assert doc["best_residual"] > 1e-3
    assert len(doc["constraint_trace"]) == 2


def test_recognize(capsys):
    code, doc = run_cli(capsys, "recognize", "--algebra", "k17",
                        "--params", "p=-1/2")
    assert code == 0
    names = {c["name"] for c in doc["candidates"]}
    assert "k17" in names


def test_build_and_json_roundtrip(tmp_path, capsys):
    code, doc = run_cli(capsys, "build", "--algebra", "k13")
    assert code == 0
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc["structure_constants"]))
    code, doc = run_cli(capsys, "recognize", "--json-in", str(path))
    assert code == 0
    assert any(c["name"] == "k13" for c in doc["candidates"])


def test_manifest(capsys):
    code, doc = run_cli(capsys, "manifest")
    assert code == 0
    assert len(doc["families"]) >= 60


def test_validation_errors(capsys):
    code, doc = run_cli(capsys, "build", "--algebra", "k99")
    assert code == 1 and "error" in doc
    code, doc = run_cli(capsys, "build", "--algebra", "k17", "--params", "p=2")
    assert code == 1
    code, doc = run_cli(capsys, "verdict", "--algebra", "k17",
                        "--params", "p=-1/3")
    assert code == 1  # no printed structure for that parameter
    code, doc = run_cli(capsys, "poisson", "--algebra", "k23",
                        "--params", "p=0", "--v", "1,2", "--s", "1")
    assert code == 1


def test_output_byte_stable(capsys):
    code1 = main(["verdict", "--algebra", "k17", "--params", "p=-1/2"])
    out1 = capsys.readouterr().out
    code2 = main(["verdict", "--algebra", "k17", "--params", "p=-1/2"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
