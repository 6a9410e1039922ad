"""Command-line client: output formats, determinism, exit codes."""

import csv
import io
import json

import pytest

from wavycyl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--two-nu", "0..7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "two_nu,n,j_nu,rho_nu,t_nu"
    assert len(lines) == 9
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "2"
    assert first[4] == "3.063622555"


def test_table_single_value(capsys):
    code, out, _ = run(capsys, "table", "--two-nu", "2000")
    assert code == 0
    assert out.strip().splitlines()[1].split(",")[4].startswith("0.1388")


def test_csv_json_same_numbers(capsys):
    code, csv_out, _ = run(capsys, "table", "--two-nu", "0")
    code2, json_out, _ = run(capsys, "table", "--two-nu", "0", "--format", "json")
    assert code == code2 == 0
    csv_row = csv_out.strip().splitlines()[1].split(",")
    json_row = json.loads(json_out)[0]
    assert list(json_row.keys()) == csv_out.strip().splitlines()[0].split(",")
    assert f"{json_row['t_nu']:.10g}" == csv_row[4]


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "sigma", "--n", "2", "--T", "1:5", "--samples", "9")
    _, second, _ = run(capsys, "sigma", "--n", "2", "--T", "1:5", "--samples", "9")
    assert first == second


def test_sigma_sign_change(capsys):
    code, out, _ = run(capsys, "sigma", "--n", "1", "--T", "3.5:4.5", "--samples", "11")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    values = [float(r[1]) for r in rows]
    assert values[0] > 0 > values[-1]


def test_sigma_oracle_columns(capsys):
    code, out, _ = run(capsys, "sigma", "--n", "2", "--T", "2:4", "--samples", "3", "--oracle")
    assert code == 0
    header = out.strip().splitlines()[0]
    assert header == "T,sigma1,sigma1_ode,abs_diff"
    worst = max(float(line.split(",")[3]) for line in out.strip().splitlines()[1:])
    assert worst <= 1e-6


def test_profile_output(capsys):
    code, out, _ = run(capsys, "profile", "--n", "2", "--s", "0.1", "--periods", "1", "--samples", "8")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "t,radius"
    assert len(rows) == 10


def test_delaunay_cylinder_column(capsys):
    code, out, _ = run(capsys, "delaunay", "--sigma", "1", "--samples", "64")
    assert code == 0
    ys = {line.split(",")[1] for line in out.strip().splitlines()[1:]}
    assert ys == {"1"}


def test_check_suite_pass(capsys):
    code, out, _ = run(capsys, "check", "--suite", "delaunay")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["suite", "name", "passed", "detail"]
    assert all(row[2] == "true" for row in rows[1:])


def test_check_csv_quoting_with_commas(capsys):
    code, out, _ = run(capsys, "check", "--suite", "specfun")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert all(len(row) == 4 for row in rows)
    assert any("," in row[3] for row in rows[1:])  # detail fields carry commas


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "table", "--two-nu", "0,1", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("two_nu,")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["table", "--two-nu", "five"])
    assert err.value.code == 2


def test_validation_error_exit_2(capsys):
    code, out, err = run(capsys, "sigma", "--n", "0", "--T", "1:2", "--samples", "3")
    assert code == 2
    assert out == ""
    assert "usage error" in err


def test_domain_error_exit_2(capsys):
    code, _, err = run(capsys, "delaunay", "--sigma", "0", "--samples", "16")
    assert code == 2
