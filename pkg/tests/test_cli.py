"""CLI: schemas, exit codes, format mirroring, byte determinism."""

import json

import pytest

from few_distances.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_box_csv(capsys):
    code, out = run_cli(capsys, "box", "--m", "2")
    assert code == 0
    assert out == "i,x,y\n0,0,0\n1,1,0\n2,0,1\n3,1,1\n"


def test_box_json(capsys):
    code, out = run_cli(capsys, "box", "--m", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[1] == {"i": 1, "x": 1, "y": 0}
    assert len(rows) == 4


def test_distances_single_row(capsys):
    code, out = run_cli(capsys, "distances", "--m", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,n,distinct,bq,normalized"
    m, n, distinct, bq, normalized = lines[1].split(",")
    assert (m, n, distinct, bq) == ("2", "4", "3", "9")
    assert normalized == "0.883058"


def test_distances_k1(capsys):
    code, out = run_cli(capsys, "distances", "--m", "2", "--k", "1")
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert row[2] == "2"  # unit box at k=1: distances {1, 2}
    assert row[3] == "5"  # 1,2,4,5,8 are sums of two squares up to 8


def test_distances_range_json(capsys):
    code, out = run_cli(capsys, "distances", "--m-range", "2:4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["distinct"] for r in rows] == [3, 8, 14]
    assert [r["m"] for r in rows] == [2, 3, 4]
    assert all(r["bq"] >= r["distinct"] for r in rows)


def test_distances_rejects_small_m(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["distances", "--m", "1"])
    assert exc.value.code == 2


def test_sieve_values(capsys):
    code, out = run_cli(capsys, "sieve", "--x", "10")
    assert code == 0
    assert out == "n\n1\n2\n3\n4\n6\n8\n9\n"


def test_sieve_json_matches_csv(capsys):
    code, csv_out = run_cli(capsys, "sieve", "--x", "12")
    code2, json_out = run_cli(capsys, "sieve", "--x", "12", "--format", "json")
    assert code == code2 == 0
    csv_vals = [int(line) for line in csv_out.splitlines()[1:]]
    json_vals = [r["n"] for r in json.loads(json_out)]
    assert csv_vals == json_vals == [1, 2, 3, 4, 6, 8, 9, 11, 12]


def test_sieve_budget_exit_code(capsys):
    code = main(["sieve", "--x", "1000000", "--max-sieve-bytes", "100"])
    err = capsys.readouterr().err
    assert code == 3
    assert "budget" in err


def test_ratio_explicit_points(capsys):
    code, out = run_cli(capsys, "ratio", "--x", "10,100")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,count,ratio"
    assert lines[1] == "10,7,1.0622"
    assert lines[2].startswith("100,")


def test_ratio_decades(capsys):
    code, out = run_cli(capsys, "ratio", "--decades", "1:3")
    assert code == 0
    xs = [int(line.split(",")[0]) for line in out.splitlines()[1:]]
    assert xs == [10, 100, 1000]


def test_ratio_rejects_degenerate(capsys):
    code = main(["ratio", "--x", "1,10"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_verify_pass_exit_zero(capsys):
    code, out = run_cli(capsys, "verify", "--n", "16")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict,scanned,witness_points,witness_distances,witness_class"
    assert lines[1] == "pass,1820,,,"


def test_verify_fail_exit_one(capsys):
    code, out = run_cli(capsys, "verify", "--n", "4", "--k", "1")
    assert code == 1
    assert out.splitlines()[1] == 'fail,1,"0,0;1,0;0,1;1,1",1;1;1;1;2;2,square'


def test_verify_json_record(capsys):
    code, out = run_cli(capsys, "verify", "--n", "4", "--k", "1", "--format", "json")
    assert code == 1
    rec = json.loads(out)
    assert rec["verdict"] == "fail"
    assert rec["scanned"] == 1
    assert rec["witness_points"] == "0,0;1,0;0,1;1,1"
    assert rec["witness_class"] == "square"


def test_verify_rejects_small_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "3"])
    assert exc.value.code == 2


def test_verify_budget_exit_code(capsys):
    code = main(["verify", "--m", "50", "--max-quad-visits", "1000"])
    assert code == 3
    assert "budget" in capsys.readouterr().err


def test_verify_prefix_uses_smallest_covering_box(capsys):
    # n = 5 lives in the 3-wide box: points (0,0),(1,0),(2,0),(0,1),(1,1)
    code, out = run_cli(capsys, "verify", "--n", "5", "--k", "1")
    assert code == 1
    rec = out.splitlines()[1]
    assert '"0,0;1,0;0,1;1,1"' in rec


def test_census_record(capsys):
    code, out = run_cli(capsys, "census", "--m", "2", "--k", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == (
        "n,triples_scanned,quads_scanned,equilateral_triples,squares,"
        "two_distance_quads,complete"
    )
    assert lines[1] == "4,4,1,0,1,1,true"


def test_census_json_mirrors_csv(capsys):
    code, out = run_cli(capsys, "census", "--m", "3", "--k", "3", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["equilateral_triples"] == 4
    assert rec["two_distance_quads"] == 1
    assert rec["squares"] == 0
    assert rec["complete"] is True


def test_scaling_rows(capsys):
    code, out = run_cli(capsys, "scaling", "--m-range", "2:4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,n,distinct,normalized"
    assert [line.split(",")[2] for line in lines[1:]] == ["3", "8", "14"]


def test_scaling_rejects_bad_span(capsys):
    code = main(["scaling", "--m-range", "5:2"])
    assert code == 2


def test_runs_are_byte_identical(capsys):
    _, first = run_cli(capsys, "distances", "--m-range", "2:6")
    _, second = run_cli(capsys, "distances", "--m-range", "2:6")
    assert first == second
    _, j1 = run_cli(capsys, "verify", "--n", "4", "--k", "1", "--format", "json")
    _, j2 = run_cli(capsys, "verify", "--n", "4", "--k", "1", "--format", "json")
    assert j1 == j2


def test_usage_error_without_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
