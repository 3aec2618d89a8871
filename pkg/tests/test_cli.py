import json

from starconv.cli import main
from starconv.gallery import resolve_fixture
from starconv.schemas import parse_structure_doc, structure_from_doc


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_function(path, values):
    path.write_text(json.dumps({"values": values}))
    return str(path)


def test_check_passes_on_ising(capsys):
    code, out, _ = run(capsys, "check", "fusion:ising")
    assert code == 0
    assert out.count("PASS") == 5


def test_check_fails_on_o6(capsys):
    code, out, _ = run(capsys, "check", "oml:o6")
    assert code == 1
    assert "cyclic: FAIL" in out
    assert "at=(0,a,b')" in out


def test_check_reports_not_applicable(capsys):
    code, out, _ = run(capsys, "check", "geometry:fano")
    assert code == 0
    assert "unit: n/a" in out


def test_check_json_schema_is_stable(capsys):
    code, out, _ = run(capsys, "check", "powerset:2", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert [sorted(r.keys()) for r in reports] == [["law", "status", "witnesses"]] * 5
    by_law = {r["law"]: r["status"] for r in reports}
    assert by_law["dual_compat"] == "n/a"


def test_unknown_fixture_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "no:such:fixture")
    assert code == 2
    assert "error" in err


def test_missing_command_is_usage_error(capsys):
    assert main([]) == 2


def test_parse_error_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "line" in err


def test_check_structure_file(tmp_path, capsys):
    emit_code, out, _ = run(capsys, "gallery", "powerset:2")
    path = tmp_path / "ps2.json"
    path.write_text(out)
    code, out, _ = run(capsys, "check", str(path))
    assert emit_code == 0 and code == 0


def test_fixture_names_win_over_files(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    decoy = tmp_path / "powerset:1"
    decoy.write_text(json.dumps({"carrier": "bool", "objects": ["only"]}))
    code, out, _ = run(capsys, "check", "powerset:1")
    assert code == 0
    assert "cyclic: PASS" in out  # the fixture has s; the decoy file does not
    code, out, _ = run(capsys, "check", "./powerset:1")
    assert code == 0
    assert "cyclic: n/a" in out  # forced file mode reads the decoy


def test_gallery_emit_round_trips_bit_exactly(tmp_path, capsys):
    for name in ["powerset:2", "fusion:ising", "heyting:chain:3", "double:effect:chain:2"]:
        target = tmp_path / "out.json"
        code, _, _ = run(capsys, "gallery", name, "--emit", str(target))
        assert code == 0
        payload = json.loads(target.read_text())
        parsed = structure_from_doc(parse_structure_doc(payload))
        assert parsed == resolve_fixture(name)


def test_gallery_carrier_override(capsys):
    code, out, _ = run(capsys, "gallery", "powerset:1", "--carrier", "bool")
    assert code == 0
    assert json.loads(out)["carrier"] == "bool"


def test_convolve_cardinality(tmp_path, capsys):
    card = [["{}", 0.0], ["{1}", 1.0], ["{2}", 1.0], ["{1,2}", 2.0]]
    f = write_function(tmp_path / "f.json", card)
    g = write_function(tmp_path / "g.json", card)
    code, out, _ = run(capsys, "convolve", "powerset:2", "--f", f, "--g", g, "--mode", "upper")
    assert code == 0
    values = dict(map(tuple, json.loads(out)["values"]))
    assert values["{1,2}"] == 2.0
    code, out, _ = run(capsys, "convolve", "powerset:2", "--f", f, "--g", g, "--mode", "lower")
    assert code == 0
    assert dict(map(tuple, json.loads(out)["values"]))["{1,2}"] == 2.0


def test_convolve_lower_on_bool_collapses_to_upper(tmp_path, capsys):
    f = write_function(tmp_path / "f.json", [["{1}", True]])
    g = write_function(tmp_path / "g.json", [["{}", True]])
    _, upper, _ = run(
        capsys, "convolve", "powerset:1", "--carrier", "bool", "--f", f, "--g", g,
        "--mode", "upper",
    )
    _, lower, _ = run(
        capsys, "convolve", "powerset:1", "--carrier", "bool", "--f", f, "--g", g,
        "--mode", "lower",
    )
    assert json.loads(upper) == json.loads(lower)


def test_convolve_missing_function_is_usage_error(capsys):
    code = main(["convolve", "powerset:2", "--g", "g.json", "--mode", "upper"])
    capsys.readouterr()
    assert code == 2


def test_monoid_lower_rank(tmp_path, capsys):
    rank = [
        ["{}", 0.0], ["{1}", 1.0], ["{2}", 1.0], ["{3}", 1.0], ["{4}", 1.0],
        ["{1,2}", 2.0], ["{1,3}", 2.0], ["{2,3}", 2.0], ["{1,4}", 2.0],
        ["{2,4}", 2.0], ["{3,4}", 2.0], ["{1,2,3}", 2.0], ["{1,2,4}", 2.0],
        ["{1,3,4}", 2.0], ["{2,3,4}", 2.0], ["{1,2,3,4}", 2.0],
    ]
    f = write_function(tmp_path / "rank.json", rank)
    code, out, _ = run(capsys, "monoid", "powerset:4", "--f", f, "--mode", "lower")
    assert code == 0
    assert out.strip() == "true"


def test_monoid_false_prints_witness(tmp_path, capsys):
    f = write_function(tmp_path / "f.json", [["{}", 1.0]])
    code, out, _ = run(capsys, "monoid", "powerset:2", "--f", f, "--mode", "lower")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "false"
    assert "at=({})" in lines[1] and "lhs=1.0" in lines[1]


def test_monoid_json_format(tmp_path, capsys):
    f = write_function(tmp_path / "f.json", [["{}", 1.0]])
    code, out, _ = run(
        capsys, "monoid", "powerset:2", "--f", f, "--mode", "lower", "--format", "json"
    )
    assert code == 1
    body = json.loads(out)
    assert body["holds"] is False
    assert body["witness"]["at"] == ["{}"]


def test_monoid_convex_on_fano(tmp_path, capsys):
    f = write_function(tmp_path / "line.json", [["1", 1.0], ["2", 1.0], ["3", 1.0]])
    code, out, _ = run(capsys, "monoid", "geometry:fano", "--f", f, "--mode", "convex")
    assert code == 0
    assert out.strip() == "true"


def test_monoid_upper_on_fano_is_usage_error(tmp_path, capsys):
    f = write_function(tmp_path / "line.json", [["1", 1.0]])
    code, _, err = run(capsys, "monoid", "geometry:fano", "--f", f, "--mode", "upper")
    assert code == 2
    assert "unit" in err


def test_text_values_use_carrier_serialization(capsys):
    _, out, _ = run(capsys, "check", "oml:o6")
    assert "lhs=0.0 rhs=1.0" in out
