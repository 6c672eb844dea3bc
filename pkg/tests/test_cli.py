"""Tests for the erfs command-line interface."""

import json
import math

import numpy as np
import pytest

from erfs import randomset
from erfs.cli import main, parse_grid
from erfs.errors import ErfsError
from erfs.randomset import MCEstimate, triangular_gaussian_cdf_bounds


def write_doc(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(json.dumps(payload))
    return str(p)


@pytest.fixture()
def gfn_pair(tmp_path):
    a = write_doc(tmp_path, "a.json", {"type": "gfn", "mode": 0.0, "precision": 0.3})
    b = write_doc(tmp_path, "b.json", {"type": "gfn", "mode": 1.0, "precision": 0.5})
    return a, b


class TestCombine:
    def test_gfn_pair_prints_product_and_conflict(self, gfn_pair, capsys):
        a, b = gfn_pair
        assert main(["combine", a, b]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        kappa = float(out[0].split("kappa=")[1])
        assert kappa == pytest.approx(1.0 - math.exp(-0.09375), abs=1e-12)
        doc = json.loads(out[1])
        assert doc["type"] == "gfn"
        assert doc["mode"] == pytest.approx(0.625, abs=1e-12)
        assert doc["precision"] == pytest.approx(0.8, abs=1e-12)

    def test_grfn_pair(self, tmp_path, capsys):
        a = write_doc(tmp_path, "a.json", {"type": "grfn", "mu": 0.0, "sigma2": 1.0, "h": 1.0})
        b = write_doc(tmp_path, "b.json", {"type": "grfn", "mu": 0.0, "sigma2": 1.0, "h": 1.0})
        assert main(["combine", a, b]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        kappa = float(out[0].split("kappa=")[1])
        assert kappa == pytest.approx(1.0 - 1.0 / math.sqrt(2.0), abs=1e-12)
        doc = json.loads(out[1])
        assert doc == {"type": "grfn", "mu": 0.0, "sigma2": 0.5, "h": 2.0}

    def test_three_way_fold(self, tmp_path, capsys):
        docs = [
            write_doc(tmp_path, f"{i}.json", {"type": "grfn", "mu": float(i), "sigma2": 1.0, "h": 1.0})
            for i in range(3)
        ]
        assert main(["combine", *docs]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert len(out) == 3  # two step lines + result

    def test_mixed_gfn_grfn(self, tmp_path, capsys):
        a = write_doc(tmp_path, "a.json", {"type": "gfn", "mode": 0.0, "precision": 0.3})
        b = write_doc(tmp_path, "b.json", {"type": "grfn", "mu": 1.0, "sigma2": 0.0, "h": 0.5})
        assert main(["combine", a, b]) == 0
        doc = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert doc["type"] == "grfn"
        assert doc["mu"] == pytest.approx(0.625, abs=1e-12)

    def test_grfv_pair(self, tmp_path, capsys):
        payload = {"type": "grfv", "mu": [0.0, 0.0],
                   "Sigma": [[1.0, 0.0], [0.0, 1.0]], "H": [[1.0, 0.0], [0.0, 1.0]]}
        a = write_doc(tmp_path, "a.json", payload)
        b = write_doc(tmp_path, "b.json", payload)
        assert main(["combine", a, b]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert float(out[0].split("kappa=")[1]) == pytest.approx(0.5, abs=1e-12)

    def test_contradiction_exit_code(self, tmp_path, capsys):
        a = write_doc(tmp_path, "a.json", {"type": "gfn", "mode": 0.0, "precision": "inf"})
        b = write_doc(tmp_path, "b.json", {"type": "gfn", "mode": 1.0, "precision": "inf"})
        assert main(["combine", a, b]) == 1

    def test_incompatible_types_exit_code(self, tmp_path):
        a = write_doc(tmp_path, "a.json", {"type": "gfn", "mode": 0.0, "precision": 1.0})
        b = write_doc(tmp_path, "b.json",
                      {"type": "gfv", "mode": [0.0], "precision": [[1.0]]})
        assert main(["combine", a, b]) == 2


class TestCdf:
    def test_inline_probabilistic_at_mean(self, capsys):
        assert main(["cdf", "--type", "grfn", "--mu", "0", "--sigma2", "1",
                     "--h", "inf", "--at", "0"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["lower"] == pytest.approx(0.5, abs=1e-15)
        assert out["upper"] == pytest.approx(0.5, abs=1e-15)

    def test_grid_output_monotone(self, capsys):
        assert main(["cdf", "--type", "grfn", "--mu", "0", "--sigma2", "1",
                     "--h", "1", "--grid", "-3:3:0.5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "x,lower,upper"
        rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
        assert rows.shape[0] == 13
        assert np.all(rows[:, 1] <= rows[:, 2])
        assert np.all(np.diff(rows[:, 1]) >= -1e-12)
        assert np.all(np.diff(rows[:, 2]) >= -1e-12)


class TestEvalExpectBelpl:
    def test_eval_gfn_membership(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "g.json", {"type": "gfn", "mode": 0.0, "precision": 2.0})
        assert main(["eval", doc, "--at", "1"]) == 0
        line = capsys.readouterr().out.strip()
        assert float(line.split(",")[1]) == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_eval_grfv_contour(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "g.json", {"type": "grfv", "mu": [0.0, 0.0],
                                             "Sigma": [[1.0, 0.0], [0.0, 1.0]],
                                             "H": [[1.0, 0.0], [0.0, 1.0]]})
        assert main(["eval", doc, "--at", "0,0"]) == 0
        line = capsys.readouterr().out.strip()
        assert float(line.split(",")[-1]) == pytest.approx(0.5, rel=1e-12)

    def test_eval_negative_vector_point(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "g.json", {"type": "grfv", "mu": [0.0, 0.0],
                                             "Sigma": [[1.0, 0.0], [0.0, 1.0]],
                                             "H": [[1.0, 0.0], [0.0, 1.0]]})
        assert main(["eval", doc, "--at", "-1,0"]) == 0
        line = capsys.readouterr().out.strip()
        assert float(line.split(",")[-1]) == pytest.approx(0.5 * math.exp(-0.25), rel=1e-12)

    def test_expect(self, capsys):
        assert main(["expect", "--type", "grfn", "--mu", "0", "--sigma2", "1",
                     "--h", str(math.pi / 2.0)]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["lower"] == pytest.approx(-1.0, abs=1e-12)
        assert out["upper"] == pytest.approx(1.0, abs=1e-12)

    def test_belpl_interval(self, capsys):
        assert main(["belpl", "--type", "grfn", "--mu", "0", "--sigma2", "1",
                     "--h", "inf", "--lo", "-1", "--hi", "1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["bel"] == pytest.approx(0.6826894921370859, abs=1e-12)

    def test_belpl_gfn_uses_possibility(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "g.json", {"type": "gfn", "mode": 0.0, "precision": 1.0})
        assert main(["belpl", doc, "--lo", "-1", "--hi", "1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["pl"] == 1.0
        assert out["bel"] == pytest.approx(1.0 - math.exp(-0.5), abs=1e-12)

    def test_conflict_command(self, gfn_pair, capsys):
        a, b = gfn_pair
        assert main(["conflict", a, b]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["kappa"] == pytest.approx(1.0 - math.exp(-0.09375), abs=1e-12)


class TestPlotdata:
    def test_example3_matches_closed_forms(self, capsys):
        assert main(["plotdata", "--example3", "--mu", "0", "--sigma", "1",
                     "--a", "1.5", "--grid", "-4:4:0.5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "x,lower,upper,contour"
        rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
        assert rows.shape[0] == 17
        lower, upper = triangular_gaussian_cdf_bounds(0.0, 1.0, 1.5, rows[:, 0])
        np.testing.assert_allclose(rows[:, 1], lower, atol=1e-10)
        np.testing.assert_allclose(rows[:, 2], upper, atol=1e-10)
        assert np.all(rows[:, 1] <= rows[:, 2])
        assert np.all(np.diff(rows[:, 1]) >= -1e-12)
        assert np.all(np.diff(rows[:, 2]) >= -1e-12)

    def test_grfn_document_curves(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "g.json", {"type": "grfn", "mu": 0.0, "sigma2": 1.0, "h": 1.0})
        assert main(["plotdata", doc, "--grid", "-2:2:1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
        assert rows[2, 3] == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-12)

    def test_decimal_point_no_locale(self, capsys):
        main(["plotdata", "--example3", "--mu", "0", "--sigma", "1",
              "--a", "0.5", "--grid", "0:1:0.5"])
        out = capsys.readouterr().out
        assert ";" not in out and "," in out


class TestMcCheck:
    def test_passes_with_default_seed(self, capsys):
        assert main(["mc-check", "--samples", "50000"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert "checks passed" in out

    def test_exit_three_on_failure(self, monkeypatch, capsys):
        monkeypatch.setattr(
            randomset, "oracle_suite",
            lambda cfg: [("forced", 1.0, MCEstimate(0.0, 1e-9, 10))],
        )
        assert main(["mc-check", "--samples", "1000"]) == 3

    def test_env_seed_override(self, monkeypatch):
        captured = {}

        def fake_suite(cfg):
            captured["seed"] = cfg.seed
            return []

        monkeypatch.setattr(randomset, "oracle_suite", fake_suite)
        monkeypatch.setenv("ERFS_SEED", "777")
        main(["mc-check", "--seed", "42", "--samples", "1000"])
        assert captured["seed"] == 777


class TestValidation:
    def test_unknown_type_exit_two(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "bad.json", {"type": "mystery", "mode": 0.0})
        assert main(["eval", doc, "--at", "0"]) == 2
        assert "type" in capsys.readouterr().err

    def test_missing_field_named(self, tmp_path, capsys):
        doc = write_doc(tmp_path, "bad.json", {"type": "gfn", "mode": 0.0})
        assert main(["eval", doc, "--at", "0"]) == 2
        assert "precision" in capsys.readouterr().err

    def test_invalid_json(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        assert main(["eval", str(p), "--at", "0"]) == 2

    def test_bad_grid(self):
        with pytest.raises(ErfsError):
            parse_grid("1:2")
        with pytest.raises(ErfsError):
            parse_grid("2:1:0.5")
        with pytest.raises(ErfsError):
            parse_grid("a:b:c")

    def test_grid_includes_endpoint(self):
        g = parse_grid("-4:4:0.01")
        assert g[0] == pytest.approx(-4.0)
        assert g[-1] == pytest.approx(4.0)
        assert len(g) == 801

    def test_stdin_document(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(
            json.dumps({"type": "gfn", "mode": 0.0, "precision": 2.0})
        ))
        assert main(["eval", "-", "--at", "0"]) == 0
        assert float(capsys.readouterr().out.strip().split(",")[1]) == 1.0
