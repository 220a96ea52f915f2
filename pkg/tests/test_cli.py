import json
import subprocess
import sys

from derivlab.cli import run
from derivlab.maps import AdditiveMap, inner_derivation, right_multiplier
from derivlab.rings import (
    Bimodule,
    dual_numbers,
    matrix_ring,
    matrix_unit,
    one_element,
    trivial_extension,
    zmod,
)

M2Z3 = matrix_ring(2, zmod(3))
REG = Bimodule.regular(M2Z3)


def test_verify_single_theorem(capsys):
    status = run(["verify", "--theorem", "thm3_2i", "--base", "zmod:3", "--n", "2"])
    out = capsys.readouterr().out
    assert status == 0
    assert "verified" in out


def test_verify_even_modulus_skips(capsys):
    status = run(["verify", "--theorem", "thm2_1", "--base", "zmod:2", "--n", "2"])
    out = capsys.readouterr().out
    assert status == 0
    assert "skipped" in out


def test_verify_json_output_parses(capsys):
    status = run(
        ["verify", "--theorem", "thm4_2", "--base", "zmod:3", "--n", "2", "--json"]
    )
    payload = json.loads(capsys.readouterr().out)
    assert status == 0
    assert payload[0]["theorem_id"] == "thm4_2"
    assert payload[0]["status"] == "verified"


def test_solve_writes_basis_and_checks_round_trip(tmp_path, capsys):
    out_file = tmp_path / "basis.json"
    status = run(
        [
            "solve", "--kind", "star", "--base", "zmod:3", "--n", "2",
            "--pairs", "exhaustive", "--out", str(out_file),
        ]
    )
    capsys.readouterr()
    assert status == 0
    payload = json.loads(out_file.read_text())
    assert payload["size"] == 81
    assert payload["pair_count"] == 225
    for map_json in payload["maps"]:
        map_file = tmp_path / "gen.json"
        map_file.write_text(json.dumps(map_json))
        rc = run(
            ["check", "--input", str(map_file), "--kind", "star",
             "--pairs", "exhaustive"]
        )
        assert rc == 0
        assert "passed" in capsys.readouterr().out


def test_check_inner_derivation_passes(tmp_path, capsys):
    inner = inner_derivation(REG, matrix_unit(M2Z3, 1, 2).coords)
    path = tmp_path / "map.json"
    path.write_text(json.dumps(inner.to_json()))
    status = run(["check", "--input", str(path), "--kind", "derivation"])
    assert status == 0
    assert "passed" in capsys.readouterr().out


def test_check_failure_exits_one_and_prints_witness(tmp_path, capsys):
    rmap = right_multiplier(REG, one_element(M2Z3).coords)
    path = tmp_path / "map.json"
    path.write_text(json.dumps(rmap.to_json()))
    status = run(["check", "--input", str(path), "--kind", "derivation"])
    out = capsys.readouterr().out
    assert status == 1
    assert "failed" in out and "witness" in out


def test_decompose_zero_product_method(tmp_path, capsys):
    inner = inner_derivation(REG, matrix_unit(M2Z3, 2, 1).coords)
    path = tmp_path / "map.json"
    path.write_text(json.dumps(inner.to_json()))
    out_file = tmp_path / "trace.json"
    status = run(
        ["decompose", "--input", str(path), "--method", "zero-product",
         "--out", str(out_file)]
    )
    capsys.readouterr()
    assert status == 0
    trace = json.loads(out_file.read_text())
    assert trace["central"] == [0, 0, 0, 0]
    delta = AdditiveMap.from_json(trace["delta"])
    assert delta.matrix == inner.matrix


def test_decompose_inner_lifted_method(tmp_path, capsys):
    md = matrix_ring(2, dual_numbers(3))
    inner = inner_derivation(Bimodule.regular(md), (1, 0, 2, 0, 0, 1, 0, 0))
    path = tmp_path / "map.json"
    path.write_text(json.dumps(inner.to_json()))
    status = run(["decompose", "--input", str(path), "--method", "inner-lifted", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert status == 0
    assert payload["base_map"]["matrix"]["data"] == [0] * 4


def test_decompose_extension_components(tmp_path, capsys):
    ext = trivial_extension(M2Z3)
    inner = inner_derivation(Bimodule.regular(ext), (1, 0, 0, 1, 0, 2, 0, 0))
    path = tmp_path / "map.json"
    path.write_text(json.dumps(inner.to_json()))
    status = run(["decompose", "--input", str(path), "--method",
                  "extension-components", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert status == 0
    assert payload["mixed_component_zero"] is True
    assert len(payload["components"]) == 4


def test_solve_on_trivial_extension_flag(capsys):
    status = run(["solve", "--kind", "jordan", "--base", "zmod:3", "--n", "2",
                  "--trivial-ext", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert status == 0
    assert payload["ring"]["kind"] == "trivial_ext"
    assert payload["size"] == 2187


def test_decompose_proof_steps(tmp_path, capsys):
    inner = inner_derivation(REG, matrix_unit(M2Z3, 2, 1).coords)
    path = tmp_path / "map.json"
    path.write_text(json.dumps(inner.to_json()))
    status = run(["decompose", "--input", str(path), "--method", "proof-steps"])
    out = capsys.readouterr().out
    assert status == 0
    assert out.count("pass") == 8


def test_pairs_subcommand(capsys):
    status = run(
        ["pairs", "--base", "zmod:3", "--n", "2", "--pairs", "exhaustive", "--json"]
    )
    payload = json.loads(capsys.readouterr().out)
    assert status == 0
    assert payload["count"] == 225
    assert len(payload["pairs"]) == 225


def test_malformed_flags_exit_two(capsys):
    assert run(["solve", "--kind", "bogus", "--base", "zmod:3", "--n", "2"]) == 2
    assert run(["verify", "--base", "nonsense"]) == 2
    assert run(["nonexistent-subcommand"]) == 2
    capsys.readouterr()


def test_missing_input_file_exits_two(capsys):
    assert run(["check", "--input", "/nonexistent/map.json", "--kind", "jordan"]) == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "derivlab", "verify", "--theorem", "thm3_2i",
         "--base", "zmod:3", "--n", "2"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0
    assert "verified" in proc.stdout


def test_thread_flag_solves_identically(capsys):
    run(["solve", "--kind", "star", "--base", "zmod:3", "--n", "2",
         "--pairs", "exhaustive", "--json"])
    solo = json.loads(capsys.readouterr().out)
    run(["solve", "--kind", "star", "--base", "zmod:3", "--n", "2",
         "--pairs", "exhaustive", "--json", "--threads", "4"])
    multi = json.loads(capsys.readouterr().out)
    assert solo == multi
