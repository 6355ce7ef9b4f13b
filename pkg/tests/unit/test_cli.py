# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

import json
import logging

import pytest
from click.testing import CliRunner

from gaussian_separability.analysis import analyzer_from_config, parse_input
from gaussian_separability.cli import main
from gaussian_separability.exceptions import SeparabilityError
from gaussian_separability.standard_form import from_standard, StandardForm

from ..states import tmsv_matrix


@pytest.fixture
def runner():
    return CliRunner()


def _report(result):
    # the JSON report is the first thing printed
    start = result.output.index("{")
    decoder = json.JSONDecoder()
    document, _end = decoder.raw_decode(result.output[start:])
    return document


def test_analyze_vacuum(runner, write_input, vacuum):
    result = runner.invoke(main, ["analyze", write_input(vacuum)])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["status"] == "OK"
    assert report["verdict"]["separable"] == "boundary"
    assert report["timings"] is None


def test_analyze_timings(runner, write_input, separable_form):
    result = runner.invoke(main, ["analyze", write_input(separable_form), "--timings"])
    assert result.exit_code == 0
    assert "reduce" in _report(result)["timings"]


def test_analyze_entangled(runner, write_input):
    result = runner.invoke(main, ["analyze", write_input(tmsv_matrix(0.5))])
    assert result.exit_code == 0
    report = _report(result)
    assert report["verdict"]["separable"] == "no"
    assert report["witness"]["margin"] < 0


def test_analyze_output_file(runner, write_input, separable_form, tmp_path):
    output = tmp_path / "report.json"
    result = runner.invoke(
        main, ["analyze", write_input(separable_form), "--output", str(output)]
    )
    assert result.exit_code == 0
    report = json.loads(output.read_text())
    assert report["certificate"]["t"] == 0.5


def test_analyze_dgcz_convention(runner, write_input):
    matrix = from_standard(StandardForm(1.0, 0.75, 0.3, 0.1)).V * 2
    path = write_input({"V": matrix.flatten().tolist()})
    result = runner.invoke(main, ["analyze", path, "--convention", "dgcz"])
    assert result.exit_code == 0
    form = _report(result)["form"]
    assert form["a"] == pytest.approx(1.0)
    assert form["b"] == pytest.approx(0.75)


def test_analyze_unphysical(runner, write_input):
    result = runner.invoke(main, ["analyze", write_input(StandardForm(0.4, 0.5, 0.0, 0.0))])
    assert result.exit_code == 3
    assert _report(result)["status"] == "UNPHYSICAL"


def test_analyze_inconsistent(runner, write_input, separable_form, mocker):
    mocker.patch("gaussian_separability.analysis.prep_certificate", return_value=None)
    result = runner.invoke(main, ["analyze", write_input(separable_form)])
    assert result.exit_code == 4
    assert _report(result)["status"] == "INCONSISTENT"


@pytest.mark.parametrize(
    "document",
    [
        "not json",
        json.dumps({"V": [1.0] * 15}),
        json.dumps({"V": [1.0, 2.0] + [0.0] * 14}),
        json.dumps({"V": ["NaN"] + [0.0] * 15}),
    ],
)
def test_analyze_invalid_input(runner, tmp_path, document):
    path = tmp_path / "state.json"
    path.write_text(document)
    result = runner.invoke(main, ["analyze", str(path)])
    assert result.exit_code == 2
    assert "Invalid input" in result.output


def test_analyze_document_tol(runner, write_input, vacuum, mocker):
    path = write_input({"V": from_standard(vacuum).V.flatten().tolist(), "tol": 1e-3})
    factory = mocker.patch(
        "gaussian_separability.cli.analyzer_from_config", wraps=analyzer_from_config
    )
    result = runner.invoke(main, ["analyze", path])
    assert result.exit_code == 0
    assert factory.call_args[0][0].tol == 1e-3
    result = runner.invoke(main, ["analyze", path, "--tol", "1e-6"])
    assert factory.call_args[0][0].tol == 1e-6


def test_debug(runner, write_input, vacuum, mocker):
    basic_config = mocker.patch("gaussian_separability.cli.logging.basicConfig")
    result = runner.invoke(main, ["--debug", "analyze", write_input(vacuum)])
    assert result.exit_code == 0
    basic_config.assert_called_once_with(level=logging.DEBUG)


def test_region_scan(runner):
    result = runner.invoke(
        main, ["region-scan", "--a", "1", "--b", "1", "--t-steps", "3", "--grid", "30"]
    )
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[0] == "t,c1sq_bound,grid_bound,grid_r1,grid_r2,r1,r2,rel_gap"
    assert len(lines) == 4
    row = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert float(row["t"]) == 0.5
    assert float(row["c1sq_bound"]) == pytest.approx(0.4019238, rel=1e-7)


def test_region_scan_output(runner, tmp_path):
    output = tmp_path / "scan.csv"
    result = runner.invoke(
        main,
        ["region-scan", "--a", "1", "--b", "0.8", "--t-steps", "2", "--grid", "20",
         "--output", str(output)],
    )
    assert result.exit_code == 0
    assert len(output.read_text().splitlines()) == 3


def test_region_scan_invalid(runner):
    result = runner.invoke(main, ["region-scan", "--a", "0.2", "--b", "1"])
    assert result.exit_code == 2
    assert "Invalid scan parameters" in result.output


def test_random_state(runner, tmp_path):
    result = runner.invoke(
        main,
        ["random-state", "--seed", "3", "--kind", "entangled", "--count", "2",
         "--output", str(tmp_path / "states")],
    )
    assert result.exit_code == 0, result.output
    assert "Wrote 2 entangled state(s)" in result.output
    paths = sorted((tmp_path / "states").iterdir())
    assert [path.name for path in paths] == ["state-0000.json", "state-0001.json"]
    for path in paths:
        document = parse_input(path.read_text())
        assert document.to_covariance().V.shape == (4, 4)
    result = runner.invoke(main, ["analyze", str(paths[0])])
    assert _report(result)["verdict"]["separable"] == "no"


def test_random_state_seed_from_environment(runner, tmp_path, monkeypatch):
    runner.invoke(main, ["random-state", "--seed", "42", "--output", str(tmp_path / "flag")])
    monkeypatch.setenv("GAUSSIAN_SEPARABILITY_SEED", "42")
    runner.invoke(main, ["random-state", "--output", str(tmp_path / "env")])
    flag = (tmp_path / "flag" / "state-0000.json").read_text()
    assert (tmp_path / "env" / "state-0000.json").read_text() == flag


def test_random_state_failure(runner, tmp_path, mocker):
    mocker.patch(
        "gaussian_separability.analysis.SeparabilityAnalyzer.random_states",
        side_effect=SeparabilityError("No boundary state found"),
    )
    result = runner.invoke(main, ["random-state", "--output", str(tmp_path)])
    assert result.exit_code == 3
    assert "No boundary state found" in result.output


def test_sample_p(runner, write_input, separable_form):
    result = runner.invoke(main, ["sample-p", write_input(separable_form), "--n", "5000"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["status"] == "OK"
    assert report["n"] == 5000
    assert report["max_abs_z"] < 6


def test_sample_p_no_certificate(runner, write_input):
    result = runner.invoke(main, ["sample-p", write_input(tmsv_matrix(0.5)), "--n", "10"])
    assert result.exit_code == 3
    assert "The state has no P-representation" in result.output


def test_sample_p_invalid_n(runner, write_input, vacuum):
    result = runner.invoke(main, ["sample-p", write_input(vacuum), "--n", "0"])
    assert result.exit_code == 2
