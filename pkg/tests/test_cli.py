import json

import pytest

from demn_localization.cli import main
from demn_localization.config.config_manager import WORKERS_ENV
from demn_localization.network import load_network


@pytest.fixture(autouse=True)
def no_worker_override(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)


@pytest.fixture
def network_file(tmp_path):
    path = tmp_path / "net.json"
    assert main(["generate", "--shape", "o", "--n", "40", "--anchors", "8", "--radius", "30",
                 "--seed", "1", "--out", str(path)]) == 0
    return path


def test_generate_writes_network(network_file):
    network = load_network(str(network_file))
    assert network.n_nodes == 40
    assert network.n_anchors == 8
    assert network.shape == "o"


def test_localize_dvhop(network_file, tmp_path, capsys):
    out = tmp_path / "placement.json"
    assert main(["localize", "--network", str(network_file), "--method", "dvhop", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["method"] == "dvhop"
    assert len(data["placement"]) == 32
    assert data["ales_percent"] >= 0.0
    assert "ALEs:" in capsys.readouterr().out


def test_localize_genetic(network_file, tmp_path):
    out = tmp_path / "placement.json"
    assert main(["localize", "--network", str(network_file), "--method", "demn-hop",
                 "--iters", "3", "--pop", "4", "--seed", "2", "--warm-start", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["metadata"]["generations"] == 3
    assert len(data["metadata"]["history"]) == 4
    assert set(data["objectives"]) == {"f1", "f2"}


def test_demn_check(capsys):
    assert main(["demn-check", "--d", "25", "--radius", "25", "--samples", "20000", "--seed", "1"]) == 0
    output = capsys.readouterr().out
    assert "analytic" in output
    assert "monte carlo" in output


def test_demn_check_invalid_case(capsys):
    assert main(["demn-check", "--d", "80", "--radius", "25"]) == 2
    assert "error" in capsys.readouterr().err


def test_benchmark_and_report(tmp_path, capsys):
    args = ["benchmark", "--methods", "dvhop", "--anchors", "6", "--radii", "30", "--repeats", "2",
            "--iters", "2", "--no-timing"]
    first, second = tmp_path / "first.csv", tmp_path / "second.csv"
    summary, report = tmp_path / "summary.json", tmp_path / "report.txt"
    assert main(args + ["--out", str(first), "--summary", str(summary), "--report", str(report)]) == 0
    assert main(args + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert json.loads(summary.read_text())["total_repeats"] == 2
    assert "END OF REPORT" in report.read_text()

    capsys.readouterr()
    rendered = tmp_path / "rendered.txt"
    assert main(["report", "--results", str(first), "--out", str(rendered)]) == 0
    assert "dvhop" in capsys.readouterr().out
    assert rendered.read_text() == report.read_text()


def test_missing_network_file(tmp_path):
    assert main(["localize", "--network", str(tmp_path / "absent.json"), "--method", "dvhop"]) == 2


def test_non_numeric_radius_is_reported(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"area": [10, 10], "radius": "abc", "n_anchors": 1, "nodes": [[1, 1], [2, 2]]}))
    assert main(["localize", "--network", str(path), "--method", "dvhop"]) == 2
    assert "radius" in capsys.readouterr().err


def test_missing_config_file(tmp_path):
    assert main(["benchmark", "--config", str(tmp_path / "absent.json"), "--out",
                 str(tmp_path / "r.csv")]) == 2
