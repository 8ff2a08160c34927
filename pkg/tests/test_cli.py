"""End-to-end CLI behavior: subcommands, exit codes, and file round-trips."""

import json

from pifam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gmax_prime(capsys):
    code, out, _ = run(capsys, "gmax", "--n", "3")
    assert code == 0
    assert "g(3) = 2" in out
    assert "f(3) = 3" in out


def test_gmax_json_schema(capsys):
    code, out, _ = run(capsys, "gmax", "--n", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"n", "g", "f", "optimal", "method", "nodes_explored", "witness"}
    assert payload["g"] == 4 and payload["f"] == 5 and payload["optimal"]
    assert sorted(payload["witness"]) == ["events", "n"]
    assert [1, 2, 3, 4] in payload["witness"]["events"]


def test_gmax_search_method(capsys):
    code, out, _ = run(capsys, "gmax", "--n", "9", "--method", "search", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["g"] == 8
    assert payload["method"] == "search-exhaustive"


def test_gmax_capacity_exit(capsys):
    code, _, err = run(capsys, "gmax", "--n", "18")
    assert code == 2
    assert "error:" in err


def test_gmax_flag_errors(capsys):
    assert run(capsys, "gmax")[0] == 1
    assert run(capsys, "gmax", "--n", "four")[0] == 1
    assert run(capsys, "gmax", "--n", "4", "--method", "magic")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_hadamard_text_file(tmp_path, capsys):
    out_file = tmp_path / "h8.txt"
    code, _, _ = run(capsys, "hadamard", "--order", "8", "--method", "sylvester",
                     "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().strip().splitlines()
    assert len(lines) == 8 and all(len(line) == 8 for line in lines)
    assert set("".join(lines)) == {"+", "-"}


def test_hadamard_unsupported_order(capsys):
    code, _, err = run(capsys, "hadamard", "--order", "6")
    assert code == 2
    assert "supported orders" in err


def test_hadamard_paley_stdout(capsys):
    code, out, _ = run(capsys, "hadamard", "--order", "12", "--method", "paley")
    assert code == 0
    assert len(out.strip().splitlines()) == 12


def test_design_pipeline_round_trip(tmp_path, capsys):
    design_file = tmp_path / "d8.json"
    code, _, _ = run(capsys, "design", "from-hadamard", "--order", "8",
                     "--out", str(design_file))
    assert code == 0
    data = json.loads(design_file.read_text())
    assert (data["v"], data["k"], data["lambda"]) == (7, 3, 1)

    code, out, _ = run(capsys, "design", "check", str(design_file))
    assert code == 0
    assert "PASS" in out
    assert "symmetric (b = v): yes" in out


def test_design_check_catches_corruption(tmp_path, capsys):
    design_file = tmp_path / "bad.json"
    design_file.write_text(json.dumps(
        {"v": 3, "k": 2, "lambda": 1, "blocks": [[1, 2], [1, 3]]}
    ))
    code, out, _ = run(capsys, "design", "check", str(design_file))
    assert code == 1
    assert "FAIL" in out and "pair {2,3}" in out


def test_design_check_malformed_json(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "design", "check", str(bad))
    assert code == 1
    assert "error:" in err


def test_design_missing_file(capsys):
    code, _, err = run(capsys, "design", "check", "no-such-file.json")
    assert code == 1


def test_projective_plane_command(tmp_path, capsys):
    plane_file = tmp_path / "pg2.json"
    code, _, _ = run(capsys, "design", "projective-plane", "--q", "2",
                     "--out", str(plane_file))
    assert code == 0
    data = json.loads(plane_file.read_text())
    assert data["v"] == 7 and len(data["blocks"]) == 7
    assert run(capsys, "design", "check", str(plane_file))[0] == 0
    assert run(capsys, "design", "projective-plane", "--q", "4")[0] == 1
    assert run(capsys, "design", "projective-plane", "--q", "11")[0] == 2


def test_family_pipeline_from_design(tmp_path, capsys):
    plane_file = tmp_path / "fano.json"
    run(capsys, "design", "projective-plane", "--q", "2", "--out", str(plane_file))

    family_file = tmp_path / "g9.json"
    code, out, _ = run(capsys, "family", "from-design", str(plane_file),
                       "--out", str(family_file))
    assert code == 0
    assert "n = r^2/lambda = 9" in out
    data = json.loads(family_file.read_text())
    assert data["n"] == 9 and len(data["events"]) == 8

    code, out, _ = run(capsys, "family", "verify", str(family_file))
    assert code == 0
    assert "PASS" in out

    code, out, _ = run(capsys, "family", "gram", str(family_file))
    assert code == 0
    report = json.loads(out)
    assert report == {"gram_ok": True, "rank": 8, "t": 8, "n": 9,
                      "full_column_rank": True}


def test_family_from_design_hypothesis_failure(tmp_path, capsys):
    design_file = tmp_path / "bad-params.json"
    design_file.write_text(json.dumps({
        "v": 4, "k": 3, "lambda": 2,
        "blocks": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
    }))
    code, _, err = run(capsys, "family", "from-design", str(design_file))
    assert code == 1
    assert "r^2/lambda = 3^2/2" in err


def test_family_from_hadamard_and_matrix_import(tmp_path, capsys):
    matrix_file = tmp_path / "h12.txt"
    run(capsys, "hadamard", "--order", "12", "--out", str(matrix_file))

    family_file = tmp_path / "f12.json"
    code, _, _ = run(capsys, "family", "from-hadamard", "--matrix", str(matrix_file),
                     "--out", str(family_file))
    assert code == 0
    data = json.loads(family_file.read_text())
    assert data["n"] == 12 and len(data["events"]) == 12
    assert run(capsys, "family", "verify", str(family_file))[0] == 0


def test_matrix_json_import(tmp_path, capsys):
    matrix_file = tmp_path / "h8.json"
    code, _, _ = run(capsys, "hadamard", "--order", "8", "--format", "json",
                     "--out", str(matrix_file))
    assert code == 0
    code, out, _ = run(capsys, "design", "from-hadamard", "--matrix", str(matrix_file))
    assert code == 0
    assert json.loads(out)["v"] == 7


def test_corrupt_matrix_import(tmp_path, capsys):
    matrix_file = tmp_path / "h.txt"
    matrix_file.write_text("++\n+(\n")
    code, _, err = run(capsys, "family", "from-hadamard", "--matrix", str(matrix_file))
    assert code == 1


def test_family_verify_names_failing_pairs(tmp_path, capsys):
    family_file = tmp_path / "bad-family.json"
    family_file.write_text(json.dumps({"n": 2, "events": [[1], [2]]}))
    code, out, _ = run(capsys, "family", "verify", str(family_file))
    assert code == 1
    assert "FAIL" in out
    assert "{1} vs {2}" in out


def test_family_verify_flags_empty_event(tmp_path, capsys):
    family_file = tmp_path / "empty-event.json"
    family_file.write_text(json.dumps({"n": 2, "events": [[], [1, 2]]}))
    code, out, _ = run(capsys, "family", "verify", str(family_file))
    assert code == 1
    assert "empty" in out


def test_family_gram_rejects_empty_event(tmp_path, capsys):
    family_file = tmp_path / "empty-event.json"
    family_file.write_text(json.dumps({"n": 2, "events": [[], [1, 2]]}))
    code, _, err = run(capsys, "family", "gram", str(family_file))
    assert code == 1
    assert "nonempty" in err


def test_johnson_command(capsys):
    code, out, _ = run(capsys, "johnson", "--n", "4", "--r", "2", "--s", "1")
    assert code == 0
    assert "omega(4,2,1) = 3" in out
    assert "f(4) >= 5" in out

    code, out, _ = run(capsys, "johnson", "--n", "8", "--r", "4", "--s", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 7 and payload["f_lower_bound"] == 9
    assert set(payload) == {"n", "r", "s", "f_lower_bound", "size", "optimal",
                            "witness", "nodes_explored", "method"}


def test_johnson_no_bound_without_hypothesis(capsys):
    code, out, _ = run(capsys, "johnson", "--n", "6", "--r", "3", "--s", "1")
    assert code == 0
    assert "omega(6,3,1) = 4" in out
    assert "implies" not in out


def test_johnson_errors(capsys):
    assert run(capsys, "johnson", "--n", "4", "--r", "4", "--s", "1")[0] == 1
    assert run(capsys, "johnson", "--n", "60", "--r", "30", "--s", "15")[0] == 2


def test_conjecture_table(capsys):
    code, out, _ = run(capsys, "conjecture", "--max", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4  # header + three rows
    assert all("HOLDS" in line for line in lines[1:])

    code, out, _ = run(capsys, "conjecture", "--max", "64")
    assert code == 0
    assert "OPEN" in out


def test_written_families_reload_identically(tmp_path, capsys):
    # round-trip: what the CLI writes, the CLI reads back without loss
    first = tmp_path / "a.json"
    run(capsys, "family", "from-hadamard", "--order", "8", "--out", str(first))
    reloaded = json.loads(first.read_text())
    code, out, _ = run(capsys, "family", "gram", str(first))
    assert code == 0
    assert json.loads(out)["t"] == len(reloaded["events"])
