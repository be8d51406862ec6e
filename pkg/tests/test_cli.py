import json
import math

import pytest

from photonstat.cli import main


@pytest.fixture
def vacuum_state(tmp_path):
    path = tmp_path / "vacuum.json"
    path.write_text(
        json.dumps(
            {"sigma_pp": 0.5, "sigma_qq": 0.5, "sigma_pq": 0.0, "mean_q": 0.0, "mean_p": 0.0}
        )
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_vacuum_single_row(self, capsys, vacuum_state):
        code, out, _ = run(capsys, "dist", "--family", "gaussian", "--state", vacuum_state)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "# classification=Probability"
        assert lines[-1] == "0,1,0"
        assert len(lines) == 5  # 3 metadata + header + one data row

    def test_squeezed_vacuum_values(self, capsys):
        code, out, _ = run(
            capsys, "dist", "--family", "squeezed-vacuum", "--r", "1.0",
            "--n-max", "8", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        sech = 1 / math.cosh(1.0)
        assert data["values"][0]["re"] == pytest.approx(sech, rel=1e-12)
        assert data["values"][1]["re"] == 0.0
        assert data["values"][2]["re"] == pytest.approx(
            sech * (math.tanh(1.0) / 2) ** 2 * 2, rel=1e-12
        )

    def test_violation_family_is_complex(self, capsys):
        code, out, _ = run(
            capsys, "dist", "--family", "xyt",
            "--x", "-0.75", "--y", "5", "--t", "0", "--tau", "4",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["classification"] == "Complex"
        assert data["values"][0]["im"] == pytest.approx(-0.4313310928137537, rel=1e-12)

    def test_inconsistent_x_tau_rejected(self, capsys):
        code, _, err = run(
            capsys, "dist", "--family", "xyt",
            "--x", "0.3", "--y", "5", "--tau", "4",
        )
        assert code == 1
        assert err.startswith("error: domain-error:")

    def test_two_mode_family(self, capsys):
        code, out, _ = run(
            capsys, "dist", "--family", "two-mode", "--s1", "0", "--s2", "0.5",
            "--n-max", "6", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["values"][0]["re"] == pytest.approx(math.sqrt(0.5), rel=1e-12)
        assert data["values"][1]["re"] == 0.0

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "dist", "--family", "xyt")
        assert code == 1
        assert "error:" in err

    def test_laguerre_route_matches_hermite(self, capsys, tmp_path):
        path = tmp_path / "state.json"
        path.write_text(
            json.dumps(
                {"sigma_pp": 1.5, "sigma_qq": 0.9, "sigma_pq": 0.3,
                 "mean_q": 0.0, "mean_p": 0.0}
            )
        )
        outputs = {}
        for route in ("hermite", "laguerre"):
            code, out, _ = run(
                capsys, "dist", "--family", "gaussian", "--state", str(path),
                "--route", route, "--n-max", "12", "--format", "json",
            )
            assert code == 0
            outputs[route] = json.loads(out)["values"]
        for vh, vl in zip(outputs["hermite"], outputs["laguerre"]):
            assert vh["re"] == pytest.approx(vl["re"], rel=1e-10, abs=1e-300)

    def test_output_is_byte_deterministic(self, capsys, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for target in (a, b):
            code = main(
                ["dist", "--family", "q-coherent", "--alpha", "1.3",
                 "--lambda", "2.0", "--out", str(target)]
            )
            assert code == 0
        assert a.read_bytes() == b.read_bytes()


class TestEntropy:
    def test_poisson_parity_report(self, capsys):
        code, out, _ = run(
            capsys, "entropy", "--family", "poisson", "--alpha", "1.0",
            "--partition", "2", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        x = 1.0
        eq_parity = -(
            math.exp(-x) * math.sinh(x) * math.log(math.exp(-x) * math.sinh(x))
            + math.exp(-x) * math.cosh(x) * math.log(math.exp(-x) * math.cosh(x))
        )
        assert data["h_sub2"] == pytest.approx(eq_parity, abs=1e-10)
        assert data["subadditive"] is True

    def test_non_probability_routes_to_complex(self, capsys):
        code, out, err = run(
            capsys, "entropy", "--family", "xyt",
            "--y", "5", "--tau", "4", "--format", "json",
        )
        assert code == 0
        assert "notice:" in err
        data = json.loads(out)
        assert "branch_index" in data
        assert data["information"]["im"] != 0.0


class TestInequality:
    def test_poisson_margin(self, capsys):
        code, out, _ = run(
            capsys, "inequality", "--family", "poisson", "--alpha", "1.0",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["form"] == "block-partition"
        assert data["margin"] >= -1e-12
        assert "parity_entropy_closed_form" in data

    def test_squeezed_vacuum_zero_margin(self, capsys):
        code, out, _ = run(
            capsys, "inequality", "--family", "squeezed-vacuum", "--r", "1.0",
            "--n-max", "600", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert abs(data["margin"]) < 1e-12

    def test_hermite_form(self, capsys, tmp_path):
        path = tmp_path / "state.json"
        path.write_text(
            json.dumps(
                {"sigma_pp": 1.5, "sigma_qq": 0.9, "sigma_pq": 0.3,
                 "mean_q": 0.0, "mean_p": 0.0}
            )
        )
        code, out, _ = run(
            capsys, "inequality", "--family", "gaussian", "--state", str(path),
            "--form", "hermite", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["form"] == "hermite-pair"
        assert data["margin"] == pytest.approx(data["information"], abs=1e-10)


class TestViolation:
    def test_boundary_in_sweep(self, capsys):
        code, out, _ = run(
            capsys, "violation", "--tau-min", "-0.003", "--tau-max", "0.003",
            "--tau-step", "0.001", "--y", "5", "--n-max", "64",
        )
        assert code == 0
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        for row in rows:
            tau = float(row[0])
            assert float(row[2]) == pytest.approx(-tau, abs=1e-12)  # slack
            if tau <= 0:
                assert row[3] == "Probability"
            else:
                assert row[3] != "Probability"

    def test_documented_cell(self, capsys):
        code, out, _ = run(
            capsys, "violation", "--tau-min", "4", "--tau-max", "4",
            "--tau-step", "1", "--y", "5", "--n-max", "64",
        )
        assert code == 0
        row = out.strip().splitlines()[1].split(",")
        assert float(row[1]) == pytest.approx(-0.75, abs=1e-12)  # x
        assert row[3] == "Complex"
        assert float(row[5]) == pytest.approx(23 / 57, abs=1e-12)  # |mean|


class TestFigures:
    def test_parity_information_endpoints(self, capsys):
        code, out, _ = run(
            capsys, "figures", "--fig", "1",
            "--param-min", "0", "--param-max", "0.1", "--param-step", "0.05",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x_bar,information"
        assert float(lines[1].split(",")[1]) == 0.0

    def test_parity_information_tail(self, capsys):
        code, out, _ = run(
            capsys, "figures", "--fig", "1",
            "--param-min", "20", "--param-max", "20", "--param-step", "1",
        )
        assert code == 0
        value = float(out.strip().splitlines()[1].split(",")[1])
        assert value == pytest.approx(math.log(2), abs=1e-6)

    def test_squeezed_vacuum_triadic_start(self, capsys):
        code, out, _ = run(
            capsys, "figures", "--fig", "4",
            "--param-min", "0", "--param-max", "0", "--param-step", "1",
        )
        assert code == 0
        value = float(out.strip().splitlines()[1].split(",")[1])
        assert value == pytest.approx(0.0, abs=1e-12)


class TestOracleCommand:
    def test_suite_passes(self, capsys):
        code, out, _ = run(capsys, "oracle")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert all(r["pass"] for r in rows if not r["name"].startswith("report:"))

    def test_empty_grid(self, capsys):
        code, out, _ = run(capsys, "oracle", "--empty-grid")
        assert code == 0
        assert out == ""


class TestErrorPaths:
    def test_unknown_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dist", "--family", "nope"])
        assert exc.value.code == 2

    def test_domain_error_is_single_line(self, capsys):
        code, _, err = run(capsys, "dist", "--family", "two-mode", "--s1", "1.5", "--s2", "0")
        assert code == 1
        assert err.count("\n") == 1
        assert err.startswith("error: domain-error:")

    def test_bad_state_file(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"sigma_pp\": 0.5}")
        code, _, err = run(capsys, "dist", "--family", "gaussian", "--state", str(path))
        assert code == 1
        assert "missing fields" in err

    def test_singular_state(self, capsys, tmp_path):
        path = tmp_path / "singular.json"
        path.write_text(
            json.dumps(
                {"sigma_pp": 1.0, "sigma_qq": 1.0, "sigma_pq": 1.5,
                 "mean_q": 0.0, "mean_p": 0.0}
            )
        )
        code, _, err = run(capsys, "dist", "--family", "gaussian", "--state", str(path))
        assert code == 1
        assert err.startswith("error: singular-denominator:")
