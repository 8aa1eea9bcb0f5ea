import json

import pytest

from groupoids.cli import main
from groupoids.corpus import bundled_dir
from groupoids.serialize import complex_to_dict, load_complex, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def corpus_file(name: str) -> str:
    return str(bundled_dir() / name)


def test_holonomy_command_text(capsys):
    code, out = run(capsys, "holonomy", corpus_file("c3.json"))
    assert code == 0
    assert "order 2" in out
    assert "cyclic(2)" in out


def test_holonomy_command_json_stable(capsys):
    code1, out1 = run(capsys, "--format", "json", "holonomy",
                      corpus_file("tetrahedron-boundary.json"))
    code2, out2 = run(capsys, "--format", "json", "holonomy",
                      corpus_file("tetrahedron-boundary.json"))
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["results"]["order"] == "6"
    assert report["input"]


def test_holonomy_tribar(capsys):
    code, out = run(capsys, "--format", "json", "holonomy", corpus_file("tribar.json"))
    assert code == 0
    assert json.loads(out)["results"]["tag"] == "cyclic(4)"


def test_invariants_command(capsys):
    code, out = run(capsys, "--format", "json", "invariants",
                    corpus_file("quotient-example.json"))
    assert code == 0
    results = json.loads(out)["results"]
    assert results["i"] == 0
    assert results["nacl"] == 1
    assert results["witness_odd_cycle"]

    code, out = run(capsys, "--format", "json", "invariants",
                    corpus_file("grid3x3.json"))
    results = json.loads(out)["results"]
    assert (results["i"], results["nacl"]) == (0, 0)

    code, out = run(capsys, "--format", "json", "invariants",
                    corpus_file("twisted-strip.json"))
    results = json.loads(out)["results"]
    assert (results["i"], results["nacl"]) == (1, 1)


def test_puzzle_reach_command(capsys):
    code, out = run(capsys, "puzzle", "reach", "--board", "4x4",
                    "--from", corpus_file("fifteen-ordered-state.json"),
                    "--to", corpus_file("fifteen-swapped-state.json"))
    assert code == 0
    assert "unreachable" in out
    code, out = run(capsys, "puzzle", "reach", "--board", "4x4",
                    "--from", corpus_file("fifteen-ordered-state.json"),
                    "--to", corpus_file("fifteen-ordered-state.json"))
    assert code == 0
    assert out.strip() == "reachable"


def test_puzzle_holonomy_command(capsys):
    code, out = run(capsys, "--format", "json", "puzzle", "holonomy",
                    "--board", "2x2")
    assert code == 0
    assert json.loads(out)["results"]["order"] == "3"


def test_hom_command(capsys):
    code, out = run(capsys, "--format", "json", "hom", "--g", "k2", "--h", "k4",
                    "--report", "fvector,euler,free-action")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["euler"] == 2
    assert results["free_action"] is True
    # free-action over a non-edge test graph is an input error
    code, _ = run(capsys, "hom", "--g", "c5", "--h", "k3",
                  "--report", "free-action")
    assert code == 2


def test_connection_command(capsys):
    code, out = run(capsys, "--format", "json", "connection",
                    corpus_file("c4-connection.json"))
    assert code == 0
    results = json.loads(out)["results"]
    assert results["valid"] is True
    assert results["order"] == "1"


def test_corpus_command(capsys):
    code, out = run(capsys, "corpus", "--seed", "7", "--count", "25")
    assert code == 0
    assert "I<=NaCl held 25/25" in out


def test_corpus_command_json_stable(capsys):
    _, out1 = run(capsys, "--format", "json", "corpus", "--seed", "3", "--count", "10")
    _, out2 = run(capsys, "--format", "json", "corpus", "--seed", "3", "--count", "10")
    assert out1 == out2


def test_malformed_json_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "simplicial",\n  "facets": [[0, 1]')
    code = main(["holonomy", str(bad)])
    assert code == 2
    err = capsys.readouterr().err
    assert "line" in err


def test_invalid_complex_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "simplicial", "facets": [[0, 1, 2], [0, 1]]}))
    assert main(["holonomy", str(bad)]) == 2


def test_bundled_corpus_round_trips():
    for path in sorted(bundled_dir().glob("*.json")):
        if path.name.endswith("-state.json") or path.name.endswith("-connection.json"):
            continue
        K = load_complex(path)
        wire = complex_to_dict(K)
        again = parse_complex(wire)
        assert complex_to_dict(again) == wire, path.name


def test_corpus_dir_override(tmp_path, monkeypatch, capsys):
    src = bundled_dir() / "c3.json"
    (tmp_path / "c3.json").write_text(src.read_text())
    monkeypatch.setenv("GROUPOID_CORPUS_DIR", str(tmp_path))
    code, out = run(capsys, "corpus", "--seed", "1", "--count", "5")
    assert code == 0
    assert "round trip 1/1" in out
