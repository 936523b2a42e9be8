import csv
import io
import json

import pytest

from radii import cli
from radii.closed_forms import CONSTANTS, TheoremId
from radii.report import SweepConfig, evaluate_point, parse_range, render, run_sweep

from conftest import params

# which theorem reads each stored constant
USERS = {
    "kappa1": "T1", "kappa2": "T1", "delta3_quadratic": "T1",
    "t2_kappa1": "T2", "t2_kappa2": "T2",
    "eta1_den": "T3", "eta2_num": "T3", "eta3_num": "T3",
    "rho2_num": "T6", "rho3_num": "T6", "rho4_num": "T6",
    "varrho2_num": "T7", "varrho3_num": "T7", "varrho4_num": "T7",
    "chi2_num": "T8", "chi3_num": "T8", "nu_star": "T8", "t8_upper1_num": "T8",
    "phi2_num": "T9", "phi3_num": "T9", "nu_double_star": "T9",
}

# small grids with every parameter nonzero, so each monomial matters
FAULT_GRIDS = {
    "T1": {"alpha": "1/2:3/2:1", "nu": "1/5"},
    "T2": {"nu": "1/5"},
    "T3": {"mu": "2/5"},
    "T6": {"nu": "1/3"},
    "T7": {"nu": "1/3"},
    "T8": {"nu": "1/5"},
    "T9": {"nu": "1/5"},
}


def perturbations():
    for name, table in CONSTANTS.items():
        keys = table.keys() if isinstance(table, dict) else range(len(table))
        for key in keys:
            yield pytest.param(name, key, id=f"{name}[{key}]")


def test_every_constant_has_a_user():
    assert set(USERS) == set(CONSTANTS)


@pytest.mark.parametrize("name, key", list(perturbations()))
def test_fault_injection(name, key, monkeypatch):
    table = CONSTANTS[name]
    if isinstance(table, dict):
        corrupted = {**table, key: table[key] + 1}
    else:
        corrupted = tuple(c + 1 if i == key else c for i, c in enumerate(table))
    monkeypatch.setitem(CONSTANTS, name, corrupted)
    theorem = TheoremId(USERS[name])
    config = SweepConfig((theorem,), {theorem: FAULT_GRIDS[theorem.value]})
    stream = io.StringIO()
    code = cli.cmd_verify(config, out=None, stream=stream)
    assert code == 1
    assert f"FAIL {theorem.value}" in stream.getvalue()


def test_clean_constants_pass():
    for theorem, grid in FAULT_GRIDS.items():
        config = SweepConfig((TheoremId(theorem),), {TheoremId(theorem): grid})
        assert cli.cmd_verify(config, stream=io.StringIO()) == 0


class TestRanges:
    def test_inclusive(self):
        assert parse_range("0:1:1/4") == [0, 0.25, 0.5, 0.75, 1]

    def test_single(self):
        assert parse_range("3/7") == [parse_range("3/7")[0]]

    def test_empty(self):
        assert parse_range("1:0:1") == []

    @pytest.mark.parametrize("bad", ["1:2", "0:1:0", "a:b:c"])
    def test_bad(self, bad):
        with pytest.raises(ValueError):
            parse_range(bad)


class TestBounds:
    def test_t6_row(self, capsys):
        assert cli.main(["bounds", "--theorem", "T6", "--nu", "0", "--order", "3"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert [r["k"] for r in rows] == ["1", "2", "3"]
        first = rows[0]
        assert float(first["lower_closed_form"]) == pytest.approx(2 / 3)
        assert float(first["upper_closed_form"]) == pytest.approx(0.72494, abs=1e-5)
        assert first["pass"] == "true"

    def test_domain_error(self, capsys):
        assert cli.main(["bounds", "--theorem", "T3", "--mu", "0"]) == 2
        assert "mu != 0" in capsys.readouterr().err

    def test_monotone_ladder_near_edge(self):
        row = cli.cmd_bounds("T2", params("struve_deriv", nu="0.49"), K=6)
        assert row.checks["monotone"]
        assert row.passed

    def test_starlike_theorem_row(self, capsys):
        assert cli.main(["bounds", "--theorem", "T4", "--nu", "1/2", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data[0]["checks"] == {"geometry": True, "maclaurin": True}


class TestVerify:
    def test_default_sweep(self, capsys):
        assert cli.main(["verify"]) == 0
        captured = capsys.readouterr()
        assert "160 rows passed" in captured.err

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["verify", "--theorem", "T7", "--grid", "0:2:1/2"]
        assert cli.main(args + ["--out", str(a)]) == 0
        assert cli.main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_empty_grid(self, capsys):
        assert cli.main(["verify", "--theorem", "T6", "--grid", "1:0:1"]) == 0
        assert "0 rows" in capsys.readouterr().err

    def test_invalid_points_reported(self, capsys):
        assert cli.main(["verify", "--theorem", "T3", "--grid=-1/4:1/4:1/4"]) == 0
        captured = capsys.readouterr()
        rows = list(csv.DictReader(io.StringIO(captured.out)))
        invalid = [r for r in rows if r["pass"] == "invalid"]
        assert len(invalid) == 1 and invalid[0]["mu"] == "0"
        assert "DomainError" in invalid[0]["failed"]
        assert "skipped T3 (mu=0)" in captured.err

    def test_named_grid(self, capsys):
        assert cli.main(["verify", "--theorem", "T1", "--grid", "alpha=0:1:1", "--grid", "nu=0"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert {(r["alpha"], r["nu"]) for r in rows} == {("0", "0"), ("1", "0")}

    def test_unknown_check(self, capsys):
        assert cli.main(["verify", "--checks", "sandwich,magic"]) == 2

    def test_selected_checks(self):
        rows = run_sweep(SweepConfig((TheoremId.T8,), {TheoremId.T8: {"nu": "0"}},
                                     checks=("oracle",)))
        assert rows[0].checks == {"oracle": True}
        assert all(not line.failed for line in rows[0].ladder)

    def test_json_matches_csv_rows(self):
        rows = run_sweep(SweepConfig((TheoremId.T9,), {TheoremId.T9: {"nu": "0:1/2:1/4"}}))
        data = json.loads(render(rows, "json"))
        assert len(data) == 3
        assert sum(len(r["ladder"]) for r in data) == len(render(rows, "csv").splitlines()) - 1

    def test_float_mode(self, monkeypatch, capsys):
        monkeypatch.setenv("RADII_PRECISION", "float")
        assert cli.main(["verify", "--theorem", "T6", "--theorem", "T1"]) == 0


class TestSingleValues:
    def test_eval(self, capsys):
        assert cli.main(["eval", "--family", "struve_u", "--nu", "0", "--z", "0"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert float(rows[0]["value"]) == 1.0

    def test_zero(self, capsys):
        assert cli.main(["zero", "--family", "bessel_g", "--nu", "0", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert float(data["value"]) == pytest.approx(0.6957, abs=1e-4)
        assert float(data["bracket_lo"]) <= float(data["value"]) <= float(data["bracket_hi"])

    def test_radius(self, capsys):
        assert cli.main(["radius", "--family", "struve_w", "--nu", "1/2", "--format", "json"]) == 0
        assert 3 < float(json.loads(capsys.readouterr().out)["value"]) < 60 / 11

    def test_radius_unsupported(self):
        assert cli.main(["radius", "--family", "struve_combo", "--alpha", "0", "--nu", "0"]) == 2

    def test_bad_number(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["zero", "--family", "bessel_g", "--nu", "x"])
        assert exc.value.code == 2


def test_evaluate_point_reports_zero_in_target_variable():
    row = evaluate_point("T2", params("struve_deriv", nu=0))
    record = [r for r in csv.DictReader(io.StringIO(render([row])))][0]
    assert record["quantity"] == "zero^2"
    assert 3 < float(record["zero"]) < 5
