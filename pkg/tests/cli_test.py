import json
from pathlib import Path

import pytest

from sequence_graphs.cli import main
from sequence_graphs.embedding.chamanara import RouteCase
from sequence_graphs.graphs import SequenceGraph

Capture = pytest.CaptureFixture[str]


def run(capsys: Capture, *argv: str) -> dict:
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)


def run_error(capsys: Capture, *argv: str) -> dict:
    exit_code = main(list(argv))
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["exit_code"] == exit_code
    return error


def test_generate(capsys: Capture) -> None:
    document = run(capsys, "generate", "--n", "8")
    assert document["sequence"] == {"family": "kronecker", "theta": "golden"}
    graph = SequenceGraph.from_json(document)
    assert graph.cpi_order == (0, 5, 2, 7, 4, 1, 6, 3)

    document = run(capsys, "generate", "--family", "vdc", "--n", "8")
    assert SequenceGraph.from_json(document).cpi_order == (0, 4, 2, 6, 1, 5, 3, 7)


def test_generate_single_vertex(capsys: Capture) -> None:
    document = run(capsys, "generate", "--family", "vdc", "--n", "1")
    assert document["n"] == 1
    assert len(document["edges"]) == 2


def test_generate_svg(capsys: Capture) -> None:
    assert main(["generate", "--n", "13", "--format", "svg"]) == 0
    svg = capsys.readouterr().out
    assert svg.startswith("<svg ")
    assert svg.count("<line ") == 26


def test_output_is_deterministic(capsys: Capture) -> None:
    argv = ["analyze", "--family", "vdc", "--n", "64"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_out_file(capsys: Capture, tmp_path: Path) -> None:
    path = tmp_path / "graphs" / "g8.json"
    assert main(["generate", "--n", "8", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["n"] == 8


def test_analyze_golden(capsys: Capture) -> None:
    document = run(capsys, "analyze", "--n", "8")
    assert document["nice"] is True
    assert document["circulant"] == [1, 5]
    assert document["gaps"] == [5, -3]
    assert document["three_gap"] is True

    document = run(capsys, "analyze", "--n", "6")
    assert document["nice"] is False
    assert document["gaps"] == [5, 2, -3]
    assert document["gap_count"] == 3


def test_analyze_van_der_corput(capsys: Capture) -> None:
    document = run(capsys, "analyze", "--family", "vdc", "--n", "16")
    assert document["gap_count"] == 5
    assert document["three_gap"] is False
    assert document["value_gaps"] == 1


def test_embed_van_der_corput(capsys: Capture) -> None:
    document = run(capsys, "embed", "--family", "vdc", "--n", "16")
    assert document["surface"] == "chamanara"
    assert document["verified"] is True
    assert document["certificate"]["verified"] is True
    routes = document["embedding"]["routes"]
    assert len(document["embedding"]["points"]) == 16
    assert len(routes) == 32
    assert sum(route["case"] == RouteCase.REROUTE for route in routes) == 2
    assert document["minor"] is None


def test_embed_van_der_corput_needs_power_of_four(capsys: Capture) -> None:
    error = run_error(capsys, "embed", "--family", "vdc", "--n", "10")
    assert error["error"] == "InadmissibleSize"
    assert error["exit_code"] == 4

    document = run(capsys, "embed", "--family", "vdc", "--n", "10", "--drop-last-edge")
    assert document["M"] == 16
    assert document["minor"]["N"] == 10
    assert document["minor"]["matches_g_prime"] is True


def test_embed_kronecker(capsys: Capture) -> None:
    document = run(capsys, "embed", "--n", "8")
    assert document["surface"] == "torus"
    assert document["genus"] == 1
    assert document["circulant"] == [1, 5]

    error = run_error(capsys, "embed", "--n", "6")
    assert error["exit_code"] == 4

    document = run(capsys, "embed", "--n", "6", "--drop-last-edge")
    assert document["M"] == 8
    assert document["minor"]["matches_g_prime"] is True


def test_minor(capsys: Capture) -> None:
    document = run(capsys, "minor", "--family", "vdc", "--m", "16", "--n", "8")
    assert document["matches_g_prime"] is True
    assert len(document["contractions"]) == 8

    document = run(capsys, "minor", "--m", "13", "--n", "8")
    assert document["matches_g_prime"] is True

    assert run_error(capsys, "minor", "--m", "8", "--n", "8")["exit_code"] == 2
    assert run_error(capsys, "minor", "--n", "8")["exit_code"] == 2


def test_iet_preset(capsys: Capture) -> None:
    document = run(
        capsys, "iet", "--preset", "example-4", "--n", "1000", "--drop-last-edge"
    )
    assert document["distinct"] is True
    assert document["edges"] == 1999
    assert document["degrees"] == {"connected": True, "degrees": {"3": 2, "4": 998}}
    assert document["gap_count"] <= document["gap_bound"] == 6
    assert document["genus"] >= 0


def test_iet_revisit(capsys: Capture, tmp_path: Path) -> None:
    path = tmp_path / "identity.toml"
    path.write_text(
        '[iet]\npermutation = [1, 2]\nlengths = ["1/2", "rest"]\n', encoding="utf-8"
    )
    error = run_error(capsys, "iet", "--iet-spec", str(path), "--n", "10")
    assert error["error"] == "OrbitRevisit"
    assert error["exit_code"] == 6


def test_iet_options_need_iet_family(capsys: Capture) -> None:
    error = run_error(capsys, "generate", "--preset", "example-4", "--n", "8")
    assert error["exit_code"] == 2
    assert run_error(capsys, "iet", "--n", "8")["exit_code"] == 2
    assert run_error(capsys, "iet", "--preset", "nope", "--n", "8")["exit_code"] == 2


def test_scan(capsys: Capture) -> None:
    document = run(capsys, "scan", "--theta", "golden", "--n-max", "100")
    (scan,) = document["scans"]
    assert scan["nice"] == [2, 3, 5, 8, 13, 21, 34, 55, 89]
    assert scan["ratios"][-1] == pytest.approx(1.618, abs=1e-3)
    assert scan["three_gap_failures"] == []


def test_config_file(capsys: Capture, tmp_path: Path) -> None:
    path = tmp_path / "run.toml"
    path.write_text('[run]\nfamily = "vdc"\nn = 16\n', encoding="utf-8")
    document = run(capsys, "analyze", "--config", str(path))
    assert document["sequence"] == {"family": "vdc", "base": 2}
    assert document["N"] == 16

    document = run(capsys, "analyze", "--config", str(path), "--family", "kronecker")
    assert document["sequence"]["family"] == "kronecker"
    assert document["N"] == 16

    path.write_text("[run]\nwidth = 3\n", encoding="utf-8")
    error = run_error(capsys, "analyze", "--config", str(path))
    assert error["error"] == "InvalidSpecFile"
    assert error["exit_code"] == 2


def test_missing_n(capsys: Capture) -> None:
    error = run_error(capsys, "generate")
    assert error["error"] == "InvalidParam"
    assert run_error(capsys, "generate", "--n", "0")["exit_code"] == 2


def test_argparse_errors_exit_two() -> None:
    with pytest.raises(SystemExit) as info:
        main(["generate", "--format", "png"])
    assert info.value.code == 2


def test_precision_errors_exit_three(capsys: Capture) -> None:
    theta = "0.5000000000000000000001"
    error = run_error(capsys, "generate", "--theta", theta, "--n", "5")
    assert error["error"] == "PrecisionInsufficient"
    assert error["exit_code"] == 3

    error = run_error(capsys, "analyze", "--theta", "0.25", "--n", "5")
    assert error["error"] == "DuplicateValues"
    assert error["exit_code"] == 3


def test_analyze_value_gaps(capsys: Capture) -> None:
    assert run(capsys, "analyze", "--n", "8")["value_gaps"] == 2
    assert run(capsys, "analyze", "--n", "6")["value_gaps"] == 3


def test_config_file_uses_flag_names(capsys: Capture, tmp_path: Path) -> None:
    path = tmp_path / "minor.toml"
    path.write_text('[run]\nfamily = "vdc"\nm = 16\nn = 8\n', encoding="utf-8")
    document = run(capsys, "minor", "--config", str(path))
    assert document["matches_g_prime"] is True
    assert len(document["contractions"]) == 8

    path.write_text('[run]\nfamily = "vdc"\nbig-m = 16\nn = 10\n', encoding="utf-8")
    assert run(capsys, "minor", "--config", str(path))["N"] == 10
