"""Pruebas de extremo a extremo de la CLI a través de `main(argv)`."""

import json

import numpy as np
import pytest

import main as cli_main
from app.clients import dataset_store_client
from app.simulation import gen_dataset
from main import main


@pytest.fixture(autouse=True)
def isolated_environment(tmp_path, monkeypatch):
    """Sin `.env` ni variables HYPERCONN_* heredadas."""
    monkeypatch.chdir(tmp_path)
    for name in ("SEED", "EPSILON", "ORDER", "SAMPLES", "TRIALS", "WORKERS", "LOG_LEVEL"):
        monkeypatch.delenv(f"HYPERCONN_{name}", raising=False)


@pytest.fixture
def subject_csv(tmp_path):
    """Sujeto de 30 ROIs x 20 muestras enteras."""
    values = np.random.default_rng(21).integers(-3, 4, size=(30, 20))
    path = tmp_path / "sub01.csv"
    path.write_text("\n".join(",".join(str(v) for v in row) for row in values) + "\n")
    return path


def _simulate(directory, *extra):
    return main(["simulate", "-o", str(directory), "--subjects-x", "5", "--subjects-y", "5", *extra])


# ===== simulate =====


def test_simulate_writes_cohort_directory(tmp_path):
    assert _simulate(tmp_path / "cohort") == 0
    assert len(list((tmp_path / "cohort").glob("subject_*.csv"))) == 10
    manifest = json.loads((tmp_path / "cohort" / "manifest.json").read_text())
    assert [entry["label"] for entry in manifest["subjects"]] == ["X"] * 5 + ["Y"] * 5
    assert manifest["config"]["seed"] == 0
    assert "workers" not in manifest["config"]


def test_simulate_is_byte_identical(tmp_path):
    assert _simulate(tmp_path / "a") == 0
    assert _simulate(tmp_path / "b", "--seed", "0") == 0
    for first in sorted((tmp_path / "a").iterdir()):
        assert first.read_bytes() == (tmp_path / "b" / first.name).read_bytes()


def test_config_file_and_flag_precedence(tmp_path, monkeypatch):
    config = tmp_path / "hyperconn.env"
    config.write_text("HYPERCONN_SEED=5\nHYPERCONN_SAMPLES=8\n")
    assert main(["--config", str(config), "simulate", "-o", str(tmp_path / "c"), "--subjects-x", "2", "--subjects-y", "2"]) == 0
    manifest = json.loads((tmp_path / "c" / "manifest.json").read_text())
    assert manifest["config"]["seed"] == 5
    assert manifest["samples_per_subject"] == 8

    monkeypatch.setenv("HYPERCONN_SEED", "6")
    assert main(["--config", str(config), "simulate", "-o", str(tmp_path / "d"), "--subjects-x", "2", "--subjects-y", "2"]) == 0
    assert json.loads((tmp_path / "d" / "manifest.json").read_text())["config"]["seed"] == 6

    assert main(["--config", str(config), "simulate", "-o", str(tmp_path / "e"), "--subjects-x", "2", "--subjects-y", "2", "--seed", "7"]) == 0
    assert json.loads((tmp_path / "e" / "manifest.json").read_text())["config"]["seed"] == 7


# ===== connectome / hyperconnectome =====


def test_connectome_from_csv(tmp_path, subject_csv):
    assert main(["connectome", "-i", str(subject_csv), "-o", str(tmp_path / "out"), "--roi", "1:4"]) == 0
    lines = (tmp_path / "out" / "sub01.connectome.csv").read_text().splitlines()
    assert lines[0] == ",1,2,3,4"
    assert len(lines) == 5
    assert (tmp_path / "out" / "run_config.json").is_file()


def test_connectome_requires_two_rois(tmp_path, subject_csv):
    assert main(["connectome", "-i", str(subject_csv), "-o", str(tmp_path / "out"), "--roi", "3:3"]) == 1


def test_hyperconnectome_is_independent_of_workers(tmp_path, subject_csv):
    outputs = {}
    for workers in (1, 4, 8):
        directory = tmp_path / f"w{workers}"
        assert main(["--workers", str(workers), "hyperconnectome", "-i", str(subject_csv), "-o", str(directory)]) == 0
        outputs[workers] = {p.name: p.read_bytes() for p in directory.iterdir()}
    assert outputs[1] == outputs[4] == outputs[8]

    document = json.loads(outputs[1]["sub01.hc.json"])
    assert len(document["entries"]) == 4960
    assert document["entries"][0]["idx"] == [1, 1, 1]


def test_hyperconnectome_exports(tmp_path, subject_csv):
    args = ["hyperconnectome", "-i", str(subject_csv), "-o", str(tmp_path / "out"), "--roi", "1:5"]
    assert main([*args, "--reduce", "--edges", "--threshold", "0", "--exclude-degenerate"]) == 0
    pairwise = (tmp_path / "out" / "sub01.pairwise.csv").read_text().splitlines()
    assert len(pairwise) == 6
    edges = (tmp_path / "out" / "sub01.edges.csv").read_text().splitlines()
    assert edges[0] == "indices,labels,weight"
    for row in edges[1:]:
        indices = row.split(",")[0].split()
        assert len(set(indices)) == 3


def test_hyperconnectome_over_cohort_directory(tmp_path):
    assert main(["simulate", "-o", str(tmp_path / "clinical"), "--cohort", "clinical",
                 "--subjects-x", "2", "--subjects-y", "2", "--rois", "6"]) == 0
    assert main(["--workers", "2", "hyperconnectome", "-i", str(tmp_path / "clinical"),
                 "-o", str(tmp_path / "hc"), "--roi", "1:4"]) == 0
    assert len(list((tmp_path / "hc").glob("*.hc.json"))) == 4


# ===== classify / report =====


def test_classify_then_report(tmp_path, capsys):
    assert main(["simulate", "-o", str(tmp_path / "cohort"), "--subjects-x", "10", "--subjects-y", "10"]) == 0
    report_path = tmp_path / "report.json"
    assert main(["classify", "-i", str(tmp_path / "cohort"), "-o", str(report_path),
                 "--trials", "3", "--svm-epochs", "20"]) == 0
    document = json.loads(report_path.read_text())
    assert set(document["trials"]) == {"graph", "hypergraph"}
    assert document["config"]["trials"] == 3

    capsys.readouterr()
    assert main(["report", "-i", str(report_path)]) == 0
    printed = capsys.readouterr().out
    assert printed.splitlines()[0].startswith("Features")
    assert "hypergraph" in printed
    assert "Trials: 3" in printed


def test_classify_prints_to_stdout(tmp_path, capsys):
    assert main(["simulate", "-o", str(tmp_path / "cohort"), "--subjects-x", "10", "--subjects-y", "10"]) == 0
    capsys.readouterr()
    assert main(["classify", "-i", str(tmp_path / "cohort"), "--features", "graph",
                 "--trials", "1", "--svm-epochs", "5"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert list(document["trials"]) == ["graph"]
    assert document["t_statistic"] is None


# ===== Códigos de salida =====


@pytest.mark.parametrize(
    "argv",
    [
        ["hyperconnectome", "-i", "x.csv", "-o", "out", "--epsilon", "-1"],
        ["hyperconnectome", "-i", "x.csv", "-o", "out", "--order", "7"],
        ["hyperconnectome", "-i", "x.csv", "-o", "out", "--variant", "kde"],
        ["simulate"],
        ["unknown"],
        ["classify", "-i", "cohort", "--fraction", "1.5"],
    ],
)
def test_invalid_parameters_exit_with_one(argv):
    assert main(argv) == 1


def test_missing_input_exits_with_two(tmp_path):
    assert main(["connectome", "-i", str(tmp_path / "missing.csv"), "-o", str(tmp_path / "out")]) == 2
    assert main(["classify", "-i", str(tmp_path)]) == 2


def test_ragged_csv_exits_with_two(tmp_path):
    path = tmp_path / "ragged.csv"
    path.write_text("1,2,3\n4,5\n")
    assert main(["hyperconnectome", "-i", str(path), "-o", str(tmp_path / "out")]) == 2


def test_missing_config_file_exits_with_two(tmp_path):
    assert main(["--config", str(tmp_path / "nope.env"), "simulate", "-o", str(tmp_path / "c")]) == 2


def test_invalid_utf8_csv_exits_with_two(tmp_path):
    path = tmp_path / "latin1.csv"
    path.write_bytes(b"1,2,3\n4,\xff,6\n")
    assert main(["connectome", "-i", str(path), "-o", str(tmp_path / "out")]) == 2


def test_mixed_shape_cohort_exits_with_two(tmp_path):
    dataset_store_client.write(gen_dataset(3, 3, 20, seed=0), tmp_path / "cohort")
    (tmp_path / "cohort" / "subject_0004.csv").write_text("\n".join(["1,2,3,4"] * 5) + "\n")
    assert main(["classify", "-i", str(tmp_path / "cohort"), "--features", "graph", "--trials", "1"]) == 2


# ===== Cohorte clínica =====


def test_clinical_cohort_full_protocol(tmp_path, capsys):
    cohort = tmp_path / "clinical"
    assert main(["simulate", "-o", str(cohort), "--cohort", "clinical",
                 "--subjects-x", "10", "--subjects-y", "10", "--rois", "12"]) == 0
    manifest = json.loads((cohort / "manifest.json").read_text())
    assert manifest["positive_label"] == "schiz"
    assert manifest["negative_label"] == "normal"

    report_path = tmp_path / "clinical_report.json"
    assert main(["classify", "-i", str(cohort), "-o", str(report_path),
                 "--trials", "10", "--svm-epochs", "20"]) == 0
    document = json.loads(report_path.read_text())
    assert document["positive_label"] == "schiz"
    assert len(document["trials"]["graph"]) == len(document["trials"]["hypergraph"]) == 10
    assert set(document["means"]) == {"graph", "hypergraph"}
    assert document["t_statistic"] is not None
    assert 0.0 <= document["p_value"] <= 1.0

    capsys.readouterr()
    assert main(["report", "-i", str(report_path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["Features", "Training", "Accuracy", "Testing", "Accuracy", "F1", "Score"]
    assert "Trials: 10" in "\n".join(lines)
    assert any(line.startswith("t = ") for line in lines)


@pytest.mark.slow
def test_clinical_cohort_full_scale(tmp_path):
    cohort = tmp_path / "clinical"
    assert main(["--workers", "4", "simulate", "-o", str(cohort), "--cohort", "clinical"]) == 0
    assert len(list(cohort.glob("subject_*.csv"))) == 228
    report_path = tmp_path / "report.json"
    assert main(["--workers", "4", "classify", "-i", str(cohort), "-o", str(report_path)]) == 0
    document = json.loads(report_path.read_text())
    assert len(document["trials"]["hypergraph"]) == 10
    assert document["p_value"] is not None


# ===== Nivel de logging =====


@pytest.fixture
def recorded_levels(monkeypatch):
    levels = []
    monkeypatch.setattr(cli_main, "configure_logging", levels.append)
    return levels


def test_log_level_follows_environment_and_flag(tmp_path, monkeypatch, recorded_levels):
    monkeypatch.setenv("HYPERCONN_LOG_LEVEL", "debug")
    assert _simulate(tmp_path / "a") == 0
    assert main(["--log-level", "warning", "simulate", "-o", str(tmp_path / "b"),
                 "--subjects-x", "1", "--subjects-y", "1"]) == 0
    assert recorded_levels == ["DEBUG", "WARNING"]


def test_log_level_from_config_file(tmp_path, recorded_levels):
    config = tmp_path / "hyperconn.env"
    config.write_text("HYPERCONN_LOG_LEVEL=ERROR\n")
    assert main(["--config", str(config), "simulate", "-o", str(tmp_path / "c"),
                 "--subjects-x", "1", "--subjects-y", "1"]) == 0
    assert recorded_levels == ["ERROR"]


def test_invalid_log_level_exits_with_one(tmp_path, monkeypatch):
    assert main(["--log-level", "verbose", "simulate", "-o", str(tmp_path / "x")]) == 1
    monkeypatch.setenv("HYPERCONN_LOG_LEVEL", "verbose")
    assert main(["simulate", "-o", str(tmp_path / "y")]) == 1
