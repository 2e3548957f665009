import json

import pytest

from supersolve import cli
from supersolve.algebra import render_algebra
from supersolve.groups import cyclic_group, two_element_lattice
from supersolve.witness import TheoremViolation


@pytest.fixture
def z4_file(tmp_path):
    path = tmp_path / "z4.json"
    path.write_text(render_algebra(cyclic_group(4)))
    return str(path)


@pytest.fixture
def z2_file(tmp_path):
    path = tmp_path / "z2.json"
    path.write_text(render_algebra(cyclic_group(2)))
    return str(path)


def _system_file(tmp_path, text, name="sys.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_satisfiable(tmp_path, capsys, z4_file):
    sys_path = _system_file(tmp_path, "add(add(x1,x2),x3) = #3\n")
    code, out, err = run_cli(capsys, ["solve", "--algebra", z4_file, "--system", sys_path])
    assert code == 0
    assert "(3, 0, 0)" in out
    assert "candidates tested" in out
    assert err == ""


def test_solve_json(tmp_path, capsys, z4_file):
    sys_path = _system_file(tmp_path, "add(add(x1,x2),x3) = #3\n")
    code, out, _ = run_cli(
        capsys, ["solve", "--algebra", z4_file, "--system", sys_path, "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "supersolve/1"
    assert doc["verdict"]["kind"] == "solution_found"
    assert doc["verdict"]["assignment"] == [3, 0, 0]
    assert doc["verdict"]["verified"] is True
    assert doc["stats"]["candidates_tested"] == 4


def test_solve_no_solution_conditional(tmp_path, capsys, z2_file):
    sys_path = _system_file(tmp_path, "add(x16, x16) = #1\n")
    code, out, _ = run_cli(capsys, ["solve", "--algebra", z2_file, "--system", sys_path])
    assert code == 1
    assert "conditional" in out


def test_solve_no_solution_exhaustive(tmp_path, capsys, z2_file):
    sys_path = _system_file(tmp_path, "add(x1, x1) = #1\n")
    code, out, _ = run_cli(capsys, ["solve", "--algebra", z2_file, "--system", sys_path])
    assert code == 1
    assert "exhaustive" in out


def test_missing_file_is_input_error(tmp_path, capsys, z4_file):
    code, out, err = run_cli(
        capsys, ["solve", "--algebra", z4_file, "--system", str(tmp_path / "nope.txt")]
    )
    assert code == 2
    assert err != ""


def test_invalid_system_is_input_error(tmp_path, capsys, z4_file):
    sys_path = _system_file(tmp_path, "mul(x1, x2) = #0\n")
    code, _, err = run_cli(capsys, ["solve", "--algebra", z4_file, "--system", sys_path])
    assert code == 2
    assert "unknown operation" in err


def test_brute_command(tmp_path, capsys, z4_file):
    sys_path = _system_file(tmp_path, "add(add(x1,x2),x3) = #3\n")
    code, out, _ = run_cli(
        capsys, ["brute", "--algebra", z4_file, "--system", sys_path, "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"]["assignment"] == [0, 0, 3]


def test_bound_command(capsys, z4_file):
    code, out, _ = run_cli(capsys, ["bound", "--algebra", z4_file, "-s", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["tight_bound"] == 12
    assert doc["loose_bound"] == 256
    assert doc["e"] == 257


def test_bench_deterministic_json_is_stable(tmp_path, capsys, z2_file):
    sys_path = _system_file(tmp_path, "add(x16, x16) = #1\n")
    argv = ["bench", "--algebra", z2_file, "--system", sys_path, "--json"]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv)
    assert code1 == code2 == 1
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["agree"] is True
    assert doc["bounded"]["stats"]["candidates_tested"] == 17
    assert doc["brute"]["stats"]["candidates_tested"] == 65536
    assert "bounded_seconds" not in doc

    code, out, _ = run_cli(capsys, argv + ["--no-deterministic"])
    assert code == 1
    assert "bounded_seconds" in json.loads(out)


def test_malcev_command(tmp_path, capsys, z4_file):
    code, out, _ = run_cli(capsys, ["malcev", "--algebra", z4_file, "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["found"] is True
    assert "x1" in doc["witness"]

    lat_path = tmp_path / "lat.json"
    lat_path.write_text(render_algebra(two_element_lattice()))
    code, out, _ = run_cli(capsys, ["malcev", "--algebra", str(lat_path), "--json"])
    assert code == 1
    doc = json.loads(out)
    assert doc["found"] is False
    assert doc["complete"] is True

    # constants enlarge the clone to polynomial operations; still no Mal'cev
    code, out, _ = run_cli(
        capsys, ["malcev", "--algebra", str(lat_path), "--constants", "--json"]
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["found"] is False
    assert doc["complete"] is True
    assert doc["tables_explored"] == 20


def test_absorb_command(tmp_path, capsys):
    fn_path = tmp_path / "and.json"
    fn_path.write_text(json.dumps(
        {"domain_size": 2, "arity": 2, "prime": 2, "table": [0, 0, 0, 1]}
    ))
    code, out, _ = run_cli(capsys, ["absorb", "--function", str(fn_path), "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["absorbing_degree"] == 2
    assert doc["components"]["3"] == [0, 0, 0, 1]
    assert doc["components"]["0"] == [0, 0, 0, 0]


def test_reduce_witness_ks(tmp_path, capsys):
    in_path = tmp_path / "phi.json"
    in_path.write_text(json.dumps({
        "mode": "ks", "n": 3, "k": 1, "p": 2, "m": 1,
        "phi": {"0": [1], "1": [1], "2": [0], "4": [0]},
    }))
    code, out, _ = run_cli(capsys, ["reduce-witness", "--input", str(in_path), "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["witness"] == [1]
    assert doc["size"] == 1


def test_reduce_witness_redweight(tmp_path, capsys):
    in_path = tmp_path / "red.json"
    in_path.write_text(json.dumps({
        "mode": "redweight", "k": 1, "a": [1, 1, 1],
        "functions": [
            {"domain_size": 2, "arity": 3, "prime": 2,
             "table": [0, 1, 1, 0, 1, 0, 0, 1]},  # x1+x2+x3 mod 2
        ],
    }))
    code, out, _ = run_cli(capsys, ["reduce-witness", "--input", str(in_path), "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["witness"] == [1]


def test_reduce_witness_bad_mode(tmp_path, capsys):
    in_path = tmp_path / "bad.json"
    in_path.write_text(json.dumps({"mode": "nope"}))
    code, _, err = run_cli(capsys, ["reduce-witness", "--input", str(in_path)])
    assert code == 2
    assert "unknown mode" in err


def test_validate_command(tmp_path, capsys, z4_file):
    code, out, _ = run_cli(capsys, ["validate", "--algebra", z4_file, "--json"])
    assert code == 0
    assert json.loads(out)["ok"] is True

    sys_path = _system_file(tmp_path, "add(x1, x2) = #3\n")
    code, out, _ = run_cli(
        capsys, ["validate", "--algebra", z4_file, "--system", sys_path, "--json"]
    )
    assert code == 0
    assert json.loads(out)["system"] == {"s": 1, "n": 2}

    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "size": 2, "operations": [{"name": "f", "arity": 1, "table": [0, 7]}]}')
    code, _, err = run_cli(capsys, ["validate", "--algebra", str(bad)])
    assert code == 2
    assert "out of range" in err


def test_theorem_violation_exit_code(tmp_path, capsys, monkeypatch):
    in_path = tmp_path / "phi.json"
    in_path.write_text(json.dumps({
        "mode": "ks", "n": 1, "k": 0, "p": 2, "m": 1, "phi": {"0": [1]},
    }))

    def boom(phi):
        raise TheoremViolation("forced for the exit-code test")

    monkeypatch.setattr(cli.witness, "ks_find_u", boom)
    code, _, err = run_cli(capsys, ["reduce-witness", "--input", str(in_path)])
    assert code == 3
    assert "theorem violation" in err


def test_brute_no_solution_exit_code(tmp_path, capsys, z2_file):
    sys_path = _system_file(tmp_path, "add(x1, x1) = #1\n")
    code, out, _ = run_cli(capsys, ["brute", "--algebra", z2_file, "--system", sys_path])
    assert code == 1
    assert "exhaustive" in out


def test_bench_satisfiable_exit_code(tmp_path, capsys, z2_file):
    sys_path = _system_file(tmp_path, "add(x1, x2) = #1\n")
    code, out, _ = run_cli(capsys, ["bench", "--algebra", z2_file, "--system", sys_path])
    assert code == 0
    assert "verdicts agree: True" in out


def test_negative_bound_rejected(tmp_path, capsys, z4_file):
    sys_path = _system_file(tmp_path, "x1 = #0\n")
    code, _, err = run_cli(
        capsys,
        ["solve", "--algebra", z4_file, "--system", sys_path, "--bound", "-1"],
    )
    assert code == 2
    assert "--bound" in err


def test_bound_override_used(tmp_path, capsys, z2_file):
    # weight-0 scan only: the weight-1 solution is out of reach
    sys_path = _system_file(tmp_path, "x3 = #1\n")
    code, out, _ = run_cli(
        capsys,
        ["solve", "--algebra", z2_file, "--system", sys_path, "--bound", "0", "--json"],
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == {
        "kind": "no_solution_in_bounded_set",
        "bound": 0,
        "conditional": True,
    }
    assert doc["stats"]["candidates_tested"] == 1


def test_solve_deterministic_json_byte_identical(tmp_path, capsys, z4_file):
    sys_path = _system_file(tmp_path, "add(x1, x2) = #2\n")
    argv = ["solve", "--algebra", z4_file, "--system", sys_path, "--json"]
    _, out1, _ = run_cli(capsys, argv)
    _, out2, _ = run_cli(capsys, argv)
    assert out1 == out2
