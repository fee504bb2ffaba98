import json

import pytest

from pigouq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_matrix_table(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--game", "classical2", "--format", "table")
    assert code == 0
    assert "(1, 1/2)" in out and "(1/2, 1)" in out
    assert out.count("P1") >= 2


def test_matrix_json(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--game", "quantum2", "--strategies", "p1p2m", "--gamma", "max", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["matrix"]["cells"][2][2] == {"a": {"num": 7, "den": 8}, "b": {"num": 7, "den": 8}}


def test_solve_json_reports_reference_metrics(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--game", "quantum2", "--strategies", "p1p2m", "--gamma", "max", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["metrics"]["cost_ne"] == {"num": 7, "den": 4}
    assert obj["metrics"]["pos"] == {"num": 7, "den": 6}
    assert obj["equilibria"]["selected"] == {"row": "M", "col": "M"}


def test_solve_table_lists_equilibria(capsys):
    code, out, _ = run_cli(capsys, "solve", "--game", "classicalk", "--n", "10", "--k", "3")
    assert code == 0
    assert "selected equilibrium:   pure:(P2,P2)" in out
    assert "cost(NE) = 15/2" in out


def test_solve_defaults_gamma_to_max(capsys):
    code, out, _ = run_cli(capsys, "solve", "--game", "quantum2", "--strategies", "p1p2q", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["metrics"]["cost_ne"] == {"num": 2, "den": 1}
    assert obj["metrics"]["pos"] == {"num": 4, "den": 3}


def test_sweep_csv_matches_reference_series(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--game", "quantumk", "--strategies", "p1p2q", "--n", "10",
        "--k-range", "1..7", "--over", "k", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "axis,value,cost_ne,cost_opt,pos,poa,equilibrium"
    assert len(lines) == 8
    costs = [float(line.split(",")[2]) for line in lines[1:]]
    printed = [8.38, 7.78, 7.38, 7.176, 7.177, 7.38, 7.78]
    assert all(abs(got - want) < 5e-3 for got, want in zip(costs, printed))


def test_sweep_gamma_over_quantum2(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--game", "quantum2", "--strategies", "p1p2m", "--over", "gamma", "--gamma-steps", "3"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 4
    assert lines[1].startswith("gamma,0.0,2.0")
    assert lines[3].split(",")[2] == "1.75"


def test_sweep_repeated_runs_byte_identical(tmp_path, capsys):
    args = [
        "sweep", "--game", "quantumk", "--strategies", "p1p2m", "--n", "10",
        "--k-range", "1..7", "--over", "k", "--format", "csv",
    ]
    path_a = tmp_path / "a.csv"
    path_b = tmp_path / "b.csv"
    assert main(args + ["--out", str(path_a)]) == 0
    assert main(args + ["--out", str(path_b)]) == 0
    capsys.readouterr()
    assert path_a.read_bytes() == path_b.read_bytes()
    assert path_a.read_bytes().startswith(b"axis,value,")


def test_scarpa_set_runs_on_quantum2(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--game", "quantum2", "--strategies", "scarpa")
    assert code == 0
    assert "S1" in out and "(1, 1/2)" in out


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 11


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("matrix", "--game", "classical2", "--k", "3"),
            ("matrix", "--game", "classical2", "--gamma", "max"),
            ("matrix", "--game", "classicalk"),  # missing --n/--k
            ("matrix", "--game", "classicalk", "--n", "10", "--k", "1", "--strategies", "p1p2q"),
            ("solve", "--game", "quantumk", "--n", "10"),  # missing --k
            ("solve", "--game", "quantumk", "--n", "10", "--k", "1", "--strategies", "scarpa"),
            ("sweep", "--game", "quantum2", "--over", "k", "--k-range", "1..7"),
            ("sweep", "--game", "quantumk", "--n", "10", "--over", "k", "--k", "3"),
            ("sweep", "--game", "quantumk", "--n", "10", "--over", "k", "--k-range", "7..5"),
            ("sweep", "--game", "classicalk", "--n", "10", "--over", "gamma"),
            ("sweep", "--game", "quantumk", "--n", "10", "--k-range", "1..7", "--over", "k", "--gamma", "oops"),
            ("matrix", "--game", "nonsense"),
        ],
    )
    def test_exit_code_1(self, capsys, argv):
        code = main(list(argv))
        capsys.readouterr()
        assert code == 1


class TestDomainErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("matrix", "--game", "quantumk", "--n", "10", "--k", "9"),
            ("matrix", "--game", "quantum2", "--gamma", "3.0"),
            ("sweep", "--game", "quantumk", "--strategies", "p1p2q", "--n", "10", "--k-range", "7..9", "--over", "k"),
        ],
    )
    def test_exit_code_2(self, capsys, argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        assert code == 2
        assert "error:" in captured.err


def test_out_redirects_payload_only(tmp_path, capsys):
    target = tmp_path / "grid.txt"
    code = main(["matrix", "--game", "classical2", "--out", str(target)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == ""
    assert "(1, 1/2)" in target.read_text()
