import io as stdio
import json

import pytest

from mullat import chain_order, new_mul_lattice
from mullat import io
from mullat.cli import main
from mullat.instances import algebra_to_dict, symmetric_group


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", stdio.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_lattice_json_round_trip(L3):
    d = io.lattice_to_dict(L3)
    assert list(d) == ["n", "leq", "mult"]
    assert d == {"n": 3, "leq": [[1, 1, 1], [0, 1, 1], [0, 0, 1]], "mult": [[0, 0, 0], [0, 0, 1], [0, 1, 2]]}
    M = io.lattice_from_json(io.lattice_to_json(L3))
    assert M == L3


@pytest.mark.parametrize(
    "doc",
    [
        {"n": 2, "leq": [[1, 1], [0, 1]]},
        {"n": 2, "leq": [[1, 1], [0, 1]], "mult": [[0, 0], [0, 1]], "extra": 1},
        {"n": 2, "leq": [[1, 2], [0, 1]], "mult": [[0, 0], [0, 1]]},
        {"n": 2, "leq": [[1, 1], [0, 1]], "mult": [[0, 0]]},
        {"n": 0, "leq": [], "mult": []},
    ],
)
def test_lattice_json_rejects(doc):
    with pytest.raises(io.InputError):
        io.lattice_from_dict(doc)


def test_hasse_dot(L3):
    dot = io.hasse_dot(L3)
    assert '"0" -> "1";' in dot and '"1" -> "2";' in dot and '"0" -> "2"' not in dot
    assert 'label="x^2"' in dot


def test_validate(tmp_path, capsys, L3):
    p = tmp_path / "l3.json"
    p.write_text(io.lattice_to_json(L3))
    code, out, _ = run(["validate", str(p)], capsys)
    assert code == 0 and json.loads(out)["valid"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "leq": [[1, 1], [0, 1]], "mult": [[0, 0], [1, 1]]}))
    code, out, _ = run(["validate", str(bad)], capsys)
    assert code == 1 and json.loads(out)["error"] == "AxiomViolation"


def test_instance_then_spec(capsys, monkeypatch):
    code, out, _ = run(["instance", "paper-3-5d"], capsys)
    assert code == 0
    code, out, _ = run(["spec", "-"], capsys, stdin=out, monkeypatch=monkeypatch)
    rep = json.loads(out)
    assert code == 0 and rep["points"] == [1] and rep["radical_elements"] == [1, 2]
    assert rep["topology"]["sober"] and rep["topology"]["spectral"]


def test_spec_writes_files(tmp_path, capsys, L3):
    p = tmp_path / "l3.json"
    p.write_text(io.lattice_to_json(L3))
    code, _, _ = run(["spec", str(p), "--dot", str(tmp_path / "s.dot"), "--json", str(tmp_path / "s.json")], capsys)
    assert code == 0
    assert (tmp_path / "s.dot").read_text().startswith("digraph")
    assert json.loads((tmp_path / "s.json").read_text())["points"] == [1]


def test_instance_zn_verify(capsys, monkeypatch):
    code, out, _ = run(["instance", "zn", "12"], capsys)
    assert code == 0 and json.loads(out)["n"] == 6
    code, out, _ = run(["verify", "-"], capsys, stdin=out, monkeypatch=monkeypatch)
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and all(l["pass"] for l in lines)


def test_instance_from_algebra_file(tmp_path, capsys):
    p = tmp_path / "s3.json"
    p.write_text(json.dumps(algebra_to_dict(symmetric_group(3))))
    code, out, _ = run(["instance", "group", str(p)], capsys)
    assert code == 0 and json.loads(out)["n"] == 3
    code, _, err = run(["instance", "ring", str(p)], capsys)
    assert code == 2


def test_closures(tmp_path, capsys, L3):
    p = tmp_path / "l3.json"
    p.write_text(io.lattice_to_json(L3))
    code, out, _ = run(["closures", str(p), "--element", "0", "--json"], capsys)
    assert json.loads(out) == {"element": 0, "radical": 1, "sp": 1, "solv": 1, "loc_solv": 1, "Solv": 1}
    code, _, _ = run(["closures", str(p), "--element", "7"], capsys)
    assert code == 2


def test_verify_battery_selection(tmp_path, capsys, L3):
    p = tmp_path / "l3.json"
    p.write_text(io.lattice_to_json(L3))
    code, out, _ = run(["verify", str(p), "--battery", "spec_sober,sober_2_6", "--mode", "forced"], capsys)
    assert code == 0 and len(out.splitlines()) == 2
    code, out, err = run(["verify", str(p), "--battery", "bogus"], capsys)
    assert code == 2 and out == ""


def test_verify_byte_identical(tmp_path, capsys, L3):
    p = tmp_path / "l3.json"
    p.write_text(io.lattice_to_json(L3))
    outs = [run(["verify", str(p), "--mode", "forced"], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_enumerate_verify(capsys):
    code, out, _ = run(["enumerate", "--max-size", "3", "--verify"], capsys)
    summary = json.loads(out.splitlines()[-1])
    assert code == 0 and summary == {"visited": 27, "by_size": {"1": 1, "2": 2, "3": 24}, "failures": 0}


def test_enumerate_parallel_matches_serial(capsys):
    args = ["enumerate", "--max-size", "3", "--samples", "30", "--seed", "5", "--sizes", "5,6", "--verify",
            "--mode", "forced"]
    serial = run(args, capsys)[1]
    parallel = run(args + ["--jobs", "2"], capsys)[1]
    assert serial == parallel


def test_enumerate_cap_and_input_errors(capsys):
    assert run(["enumerate", "--max-size", "6"], capsys)[0] == 3
    assert run(["enumerate", "--max-size", "2", "--samples", "3"], capsys)[0] == 2


def test_malformed_json_exit_code(capsys, monkeypatch):
    assert run(["verify", "-"], capsys, stdin="{not json", monkeypatch=monkeypatch)[0] == 2
    assert run(["spec", "/no/such/file.json"], capsys)[0] == 2


def test_unknown_subcommand_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_morphism_check(tmp_path, capsys, L3):
    (tmp_path / "l3.json").write_text(io.lattice_to_json(L3))
    B2 = new_mul_lattice(chain_order(2), [[0, 0], [0, 1]])
    # x^2 and x go to the bottom, 1 to the top
    doc = {"source": "l3.json", "target": io.lattice_to_dict(B2), "f": [0, 0, 1]}
    (tmp_path / "m.json").write_text(json.dumps(doc))
    code, out, _ = run(["morphism", str(tmp_path / "m.json"), "--check"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["flags"]["compatible"] and rep["primes_preserved"] and rep["preimage_identity"]
    assert rep["spec_map"] == {"0": 1}
    doc["f"] = [1, 1, 1]
    (tmp_path / "bad.json").write_text(json.dumps(doc))
    assert run(["morphism", str(tmp_path / "bad.json"), "--check"], capsys)[0] == 2
