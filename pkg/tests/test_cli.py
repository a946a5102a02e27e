import json

import pytest

from degroot.cli import main

SIERPINSKI = {"n": 2, "opens": [[], [0], [0, 1]]}
INDISCRETE2 = {"n": 2, "opens": [[], [0, 1]]}


@pytest.fixture
def write_json(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dual_sierpinski(capsys, write_json):
    path = write_json("sierpinski.json", SIERPINSKI)
    code, out, _ = run(capsys, "dual", "--in", path, "--power", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["result"] == {"n": 2, "opens": [[], [1], [0, 1]]}
    assert data["distinct_count"] == 2
    assert data["sequence"][2] == SIERPINSKI


def test_dual_symbolic(capsys):
    code, out, _ = run(capsys, "dual", "--in", "example4.5", "--power", "2")
    assert code == 0
    assert out.splitlines()[0] == "cofinite@aleph1"


def test_dual_power_zero_echoes_canonically(capsys):
    code, out, _ = run(capsys, "dual", "--in", '{"n": 2, "opens": [[0, 1], []]}', "--power", "0",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == INDISCRETE2


def test_classify(capsys, write_json):
    path = write_json("s.json", SIERPINSKI)
    assert run(capsys, "classify", "--in", path)[1].splitlines()[0] == "2-generative, G2a"
    assert run(capsys, "classify", "--in", "cocountable@aleph1")[1].splitlines()[0] == "3-generative, G3b"
    assert run(capsys, "classify", "--in", "example4.5")[1].splitlines()[0] == "4-generative, G4"
    code, out, _ = run(capsys, "classify", "--in", "example4.5", "--format", "json")
    assert json.loads(out) == {
        "n_generative": 4,
        "sequence_distinct": 4,
        "flags": {"g1": False, "g2a": False, "g2b": False, "g3a": False, "g3b": False,
                  "g3c": False, "g4": True},
    }


def test_census_formats(capsys):
    code, out, _ = run(capsys, "census", "-n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,labeled,homeo,g1,g2a_only,partition", "3,29,9,5,24,5"]
    code, out, _ = run(capsys, "census", "-n", "1", "--format", "json")
    assert json.loads(out)["labeled"] == 1
    code, out, _ = run(capsys, "census", "-n", "4", "--format", "json")
    assert json.loads(out)["labeled"] == 355


def test_census_verification_failure_exit(capsys, monkeypatch):
    import degroot.census as mod

    monkeypatch.setattr(mod, "verify_prop_3_5", lambda c: c.n_generative != 2)
    code, out, err = run(capsys, "census", "-n", "2")
    assert code == 4
    assert "g2b-iff-g3c" in err
    assert json.loads(out)["n"] == 2


def test_census_cache_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("DEGROOT_CACHE_DIR", str(tmp_path))
    assert run(capsys, "census", "-n", "2")[0] == 0
    assert len(list(tmp_path.glob("census-n2-*.json"))) == 1


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 2, "output_format": "json"}))
    assert run(capsys, "census", "-n", "3", "--config", str(cfg))[0] == 3
    code, out, _ = run(capsys, "census", "-n", "3", "--config", str(cfg), "--max-n", "3")
    assert code == 0 and json.loads(out)["labeled"] == 29


def test_laws(capsys):
    code, out, _ = run(capsys, "laws", "-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert all(line.startswith("PASS") and "finite=29" in line for line in lines)
    code, out, _ = run(capsys, "laws", "-n", "0", "--format", "json")
    assert code == 0 and all(r["passed"] and r["finite_instances"] == 1 for r in json.loads(out))


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "3", "--format", "json")
    assert code == 0 and len(out.splitlines()) == 29
    for strategy in ("rows", "extension", "naive"):
        code, out, _ = run(capsys, "enumerate", "-n", "3", "--strategy", strategy, "--up-to-homeo",
                           "--format", "json")
        assert len(out.splitlines()) == 9


def test_symbolic_list(capsys):
    code, out, _ = run(capsys, "symbolic-list", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert {r["n_generative"] for r in rows} == {1, 2, 3, 4}
    ex = next(r for r in rows if r["space"] == "initial-segments-minus-finite@aleph1")
    assert ex["dual"] == "cocountable@aleph1"


def test_dual_image(capsys):
    code, out, _ = run(capsys, "dual-image", "-n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["image_size"] == 29 and data["all_arise_as_duals"]


@pytest.mark.parametrize("argv,code", [
    (["dual", "--in", "nonsense"], 2),
    (["dual", "--in", '{"n": 2, "opens": [[0]]}'], 2),
    (["dual", "--in", "discrete@3", "--power", "9"], 2),
    (["census", "-n", "8"], 3),
    (["classify", "--in", json.dumps({"n": 3, "opens": [[], [0, 1, 2]]}), "--max-n", "2"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_deterministic_output(capsys):
    first = run(capsys, "census", "-n", "4", "--format", "json")[1]
    second = run(capsys, "census", "-n", "4", "--format", "json")[1]
    assert first == second
