"""End-to-end command-line behaviour: reports, files, exit codes."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from plmaps import PLMap, tent, xi
from plmaps.cli import RunConfig, main
from plmaps.errors import ValidationError
from plmaps.formats import parse_plmap, plmap_to_json

F = Fraction


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


def write_map(path, m):
    path.write_text(plmap_to_json(m))
    return str(path)


@pytest.fixture
def tent_path(tmp_path):
    return write_map(tmp_path / "tent.map", tent())


def test_make_then_check_commute(tmp_path, capsys, tent_path):
    out = tmp_path / "xi5.map"
    code, report, _ = invoke(capsys, "make", "xi", "--t", "5", "-o", str(out))
    assert code == 0
    assert parse_plmap(out.read_text()) == xi(5)
    code, report, _ = invoke(capsys, "check-commute", "--g", tent_path, "--psi", str(out))
    assert code == 0
    assert report == {"commutes": True}


def test_check_commute_false_verdict_exits_one(tmp_path, capsys, tent_path):
    clamp = write_map(tmp_path / "clamp.map",
                      PLMap.from_pairs([(0, 0), (F(1, 2), 1), (1, 1)]))
    code, report, _ = invoke(capsys, "check-commute", "--g", tent_path, "--psi", clamp)
    assert code == 1
    assert report == {"commutes": False}


def test_mu_grid_points(tmp_path, capsys, tent_path):
    code, report, _ = invoke(capsys, "mu", "--g", tent_path, "--n", "4")
    assert code == 0
    assert report["points"] == ["0", "1/8", "1/4", "3/8", "1/2", "5/8", "3/4", "7/8", "1"]


def test_halve_writes_the_expected_map(tmp_path, capsys, tent_path):
    xi6 = write_map(tmp_path / "xi6.map", xi(6))
    out = tmp_path / "half.map"
    code, report, _ = invoke(
        capsys, "halve", "--g", tent_path, "--psi", xi6, "-o", str(out)
    )
    assert code == 0
    assert parse_plmap(out.read_text()) == xi(3)


def test_reduce_to_odd_lap_count(tmp_path, capsys, tent_path):
    xi12 = write_map(tmp_path / "xi12.map", xi(12))
    code, report, _ = invoke(capsys, "reduce", "--g", tent_path, "--psi", xi12)
    assert code == 0
    assert parse_plmap(json.dumps(report)) == xi(3)


def test_classify_iterate(tmp_path, capsys, tent_path):
    xi4 = write_map(tmp_path / "xi4.map", xi(4))
    code, report, _ = invoke(capsys, "classify", "--g", tent_path, "--psi", xi4)
    assert code == 0
    assert report == {"kind": "iterate", "power": 2}


def test_boundary_checks_pass(tmp_path, capsys, tent_path):
    xi7 = write_map(tmp_path / "xi7.map", xi(7))
    code, report, _ = invoke(capsys, "boundary-checks", "--g", tent_path, "--psi", xi7)
    assert code == 0
    assert report["all_passed"] is True
    assert len(report["checks"]) == 4


def test_density_verdicts(tmp_path, capsys, tent_path):
    code, report, _ = invoke(capsys, "density", "--g", tent_path, "--depth", "6")
    assert code == 0
    assert report["max_gaps"] == ["1", "1/2", "1/4", "1/8", "1/16", "1/32"]
    assert report["heuristic_verdict"] == "gaps-shrinking"
    assert report["basis"] == "finite-depth evidence"


def test_density_stalls_on_attracting_fixture(tmp_path, capsys):
    from plmaps.fixtures import attracting_example

    att = write_map(tmp_path / "att.map", attracting_example())
    code, report, _ = invoke(capsys, "density", "--g", att, "--depth", "14")
    assert code == 0
    assert report["heuristic_verdict"] == "gaps-stalled"


def test_make_conjugate_and_fit(tmp_path, capsys, tent_path):
    h = write_map(tmp_path / "h.map",
                  PLMap.from_pairs([(0, 0), (F(1, 4), F(3, 5)), (1, 1)]))
    g_path = tmp_path / "g.map"
    code, _, _ = invoke(capsys, "make", "conjugate", "--h", h, "-o", str(g_path))
    assert code == 0
    fit_path = tmp_path / "fit.map"
    code, report, _ = invoke(
        capsys, "fit-conjugacy", "--g", str(g_path), "--depth", "6", "-o", str(fit_path)
    )
    assert code == 0
    assert report["stabilized"] is True
    assert parse_plmap(fit_path.read_text()) == parse_plmap((tmp_path / "h.map").read_text())


def test_fit_exits_one_without_stabilization(tmp_path, capsys):
    from plmaps.fixtures import attracting_example

    att = write_map(tmp_path / "att.map", attracting_example())
    code, report, _ = invoke(capsys, "fit-conjugacy", "--g", att, "--depth", "6")
    assert code == 1
    assert report["stabilized"] is False


def test_make_conjugate_of_sawtooth(tmp_path, capsys):
    h = write_map(tmp_path / "h.map",
                  PLMap.from_pairs([(0, 0), (F(1, 4), F(3, 5)), (1, 1)]))
    xi3 = write_map(tmp_path / "xi3.map", xi(3))
    psi_path = tmp_path / "psi3.map"
    code, report, _ = invoke(
        capsys, "make", "conjugate", "--h", h, "--of", xi3, "-o", str(psi_path)
    )
    assert code == 0
    assert "v" not in report  # a 3-lap commutator is not unimodal


def test_slope_law_report(tmp_path, capsys, tent_path):
    xi5 = write_map(tmp_path / "xi5.map", xi(5))
    code, report, _ = invoke(
        capsys, "slope-law", "--g", tent_path, "--psi", xi5, "--t", "5"
    )
    assert code == 0
    assert report["residual"] == 0.0
    assert report["within_tolerance"] is True
    assert report["precision_digits"] == 50


def test_power_law_report(tmp_path, capsys):
    from plmaps.conjugacy import conjugate_map

    h = PLMap.from_pairs([(0, 0), (F(1, 2), F(3, 4)), (1, 1)])
    g = write_map(tmp_path / "g.map", conjugate_map(tent(), h))
    code, report, _ = invoke(capsys, "power-law", "--g", g, "--depth", "8")
    assert code == 0
    assert report["applicable"] is True and report["within_tolerance"] is True


def test_dyadic_density_report(capsys):
    code, report, _ = invoke(
        capsys, "dyadic-density", "--k", "1", "--n", "1", "--t", "3", "--pmax", "3"
    )
    assert code == 0
    assert report["window"] == ["1/2", "1"]
    assert report["gaps"] == ["1/4", "1/4", "3/16"]


def test_dyadic_density_usage_error(capsys):
    code, report, err = invoke(
        capsys, "dyadic-density", "--k", "1", "--n", "1", "--t", "4", "--pmax", "3"
    )
    assert code == 2
    assert "power of two" in err


def test_emit_csv(tmp_path, capsys, tent_path):
    out = tmp_path / "tent.csv"
    code, report, _ = invoke(
        capsys, "emit", "--map", tent_path, "--samples", "3", "--format", "csv",
        "-o", str(out)
    )
    assert code == 0
    assert report["rows"] == 3
    assert out.read_text().splitlines()[1] == "0,0,0.0,0.0"


def test_emit_svg(tmp_path, capsys, tent_path):
    out = tmp_path / "tent.svg"
    code, _, _ = invoke(
        capsys, "emit", "--map", tent_path, "--samples", "3",
        "--format", "svg-points", "-o", str(out)
    )
    assert code == 0
    assert 'points="0.0,0.0 0.5,1.0 1.0,0.0"' in out.read_text()


def test_missing_file_is_usage_error(capsys):
    code, _, err = invoke(capsys, "mu", "--g", "/nonexistent.map", "--n", "3")
    assert code == 2
    assert "--g" in err


def test_halving_odd_laps_is_validation_error(tmp_path, capsys, tent_path):
    xi5 = write_map(tmp_path / "xi5.map", xi(5))
    code, _, err = invoke(capsys, "halve", "--g", tent_path, "--psi", xi5)
    assert code == 2
    assert "odd" in err


def test_written_maps_reparse_identically(tmp_path, capsys):
    for name, m in (("xi7", xi(7)), ("tent", tent())):
        path = tmp_path / f"{name}.map"
        write_map(path, m)
        assert parse_plmap(path.read_text()) == m


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig("mu", n=0)
    with pytest.raises(ValidationError):
        RunConfig("mu", tolerance=-1.0)
    with pytest.raises(ValidationError):
        RunConfig("emit", format="png")
    with pytest.raises(ValidationError):
        RunConfig("mu", threads=0)
