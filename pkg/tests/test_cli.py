import json

from phimod3.cli import main

GOLDEN = {
    "p": 3,
    "f": 1,
    "a": ["9"],
    "b": ["6"],
    "c": ["5"],
    "filt": [{"type": "F0", "k1": 1, "k2": 2, "x1": "0", "x2": 0, "x2p": 0}],
}


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_and_check_wa(tmp_path, capsys):
    path = write(tmp_path, "m.json", GOLDEN)
    code, out = run(capsys, "validate", "--in", path)
    assert code == 0
    assert json.loads(out)["valid"] is True
    code, out = run(capsys, "check-wa", "--in", path, "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["admissible"] is True
    assert report["irreducible"] is False
    assert report["oracle_agrees"] is True
    assert all(s["equality"] for s in report["submodules"].values())


def test_output_is_byte_deterministic(tmp_path, capsys):
    path = write(tmp_path, "m.json", GOLDEN)
    _, first = run(capsys, "check-wa", "--in", path)
    _, second = run(capsys, "check-wa", "--in", path)
    assert first == second
    _, gen1 = run(capsys, "generate", "--seed", "12", "--n", "3")
    _, gen2 = run(capsys, "generate", "--seed", "12", "--n", "3")
    assert gen1 == gen2


def test_iso_self(tmp_path, capsys):
    path = write(tmp_path, "m.json", GOLDEN)
    code, out = run(capsys, "iso", "--left", path, "--right", path, "--oracle", "--witness")
    assert code == 0
    result = json.loads(out)
    assert result["isomorphic"] is True
    assert result["oracle_agrees"] is True
    assert result["witness_valid"] is True


def test_invalid_input_exit_code(tmp_path, capsys):
    bad = dict(GOLDEN, a=["0"])
    path = write(tmp_path, "bad.json", bad)
    code, _ = run(capsys, "validate", "--in", path)
    assert code == 1
    code, _ = run(capsys, "check-wa", "--in", "/nonexistent.json")
    assert code == 1


def test_normalize_and_monodromy(tmp_path, capsys):
    raw = {
        "p": 3,
        "f": 1,
        "a": ["9"],
        "b": ["6"],
        "c": ["5"],
        "raw_filtration": [
            {"k1": 1, "k2": 2, "u": ["1", "2", "3"], "v": ["0", "1", "5"], "lam": "1", "mu": "1"}
        ],
    }
    path = write(tmp_path, "raw.json", raw)
    code, out = run(capsys, "normalize", "--in", path)
    assert code == 0
    result = json.loads(out)
    assert result["module"]["filt"][0]["type"] == "F0"

    mono = {
        "p": 3,
        "f": 1,
        "a": ["1"],
        "b": ["3"],
        "c": ["9"],
        "monodromy": {"entries": [{"row": 0, "col": 1, "scale": "2"}]},
    }
    path = write(tmp_path, "mono.json", mono)
    code, out = run(capsys, "monodromy", "--in", path)
    assert code == 0
    result = json.loads(out)
    assert result["valid"] is True
    assert {(e["row"], e["col"]) for e in result["positions"]} == {(0, 1), (1, 2)}


def test_selftest_command(capsys):
    code, out = run(capsys, "selftest", "--seed", "2", "--n", "30")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_generate_targets(capsys):
    code, out = run(capsys, "generate", "--seed", "3", "--n", "2", "--target", "admissible")
    assert code == 0
    assert len(json.loads(out)) == 2
