"""Pruebas de generadores de cohortes, oráculos exactos y clientes de archivos."""

import math
import os
import stat
from collections import Counter

import numpy as np
import pytest

from app.clients import dataset_store_client, ingest_timeseries, timeseries_csv_client
from app.core.errors import ContractViolationError, ParseError
from app.estimators import pearson
from app.models.core_models import TimeSeriesMatrix
from app.simulation import (
    CASE_LABEL,
    CONTROL_LABEL,
    gen_cohort_standin,
    gen_dataset,
    gen_x_subject,
    gen_y_subject,
    oracle_pairwise_corr_x,
    oracle_pairwise_corr_y,
    oracle_total_corr_x,
    oracle_total_corr_y,
    y_distribution_pmf,
)
from app.simulation.generators import coupled_triples
from app.utils.atomic_io import write_text_atomic
from app.utils.random_streams import derive_stream

LN2 = math.log(2.0)


# ===== Oráculos =====


def test_oracle_values():
    assert oracle_total_corr_y() == pytest.approx(LN2, abs=1e-12)
    assert oracle_total_corr_y() != 0.0
    assert oracle_total_corr_x() == pytest.approx(0.0, abs=1e-12)
    for i, j in [(0, 1), (1, 2), (0, 2)]:
        assert oracle_pairwise_corr_y(i, j) == pytest.approx(0.0, abs=1e-12)
        assert oracle_pairwise_corr_x(i, j) == pytest.approx(0.0, abs=1e-12)
    assert oracle_pairwise_corr_y(1, 1) == pytest.approx(1.0, abs=1e-12)


def test_y_pmf_has_four_legal_triples():
    pmf = y_distribution_pmf()
    assert len(pmf) == 4
    assert all(a * b * c == 1 for a, b, c in pmf)
    assert all(p == 0.25 for p in pmf.values())


def test_oracle_rejects_bad_indices():
    with pytest.raises(ContractViolationError):
        oracle_pairwise_corr_y(0, 3)


# ===== Sujetos X e Y =====


def test_x_subject_values_and_reproducibility():
    first = gen_x_subject(derive_stream(5, 0, 1), 50)
    second = gen_x_subject(derive_stream(5, 0, 1), 50)
    np.testing.assert_array_equal(first.values, second.values)
    assert set(np.unique(first.values)) <= {-1.0, 1.0}
    assert first.values.shape == (3, 50)


def test_large_x_subject_rows_are_balanced():
    values = gen_x_subject(derive_stream(1, 0, 0), 100_000).values
    assert np.all(np.abs(values.mean(axis=1)) < 0.02)


def test_y_subject_parity_and_pairwise_independence():
    values = gen_y_subject(derive_stream(2, 0, 0), 100_000).values
    np.testing.assert_array_equal(values.prod(axis=0), 1.0)
    assert np.all(np.abs(values.mean(axis=1)) < 0.02)
    for i, j in [(0, 1), (1, 2), (0, 2)]:
        assert abs(pearson(values[i], values[j])) < 0.02


def test_y_subject_joint_distribution():
    values = gen_y_subject(derive_stream(3, 0, 0), 1_000_000).values
    counts = Counter(map(tuple, values.T.astype(int).tolist()))
    assert set(counts) == set(y_distribution_pmf())
    for count in counts.values():
        assert abs(count / 1_000_000 - 0.25) < 0.005


def test_subjects_require_samples():
    with pytest.raises(ContractViolationError):
        gen_y_subject(derive_stream(0), 0)


# ===== Cohortes =====


def test_gen_dataset_layout_and_determinism():
    dataset = gen_dataset(3, 2, 20, seed=9)
    assert [s.label for s in dataset.subjects] == ["X", "X", "X", "Y", "Y"]
    assert dataset.labels_pm1() == [-1, -1, -1, 1, 1]
    assert dataset.count("Y") == 2
    again = gen_dataset(3, 2, 20, seed=9, n_jobs=3)
    for a, b in zip(dataset.subjects, again.subjects):
        np.testing.assert_array_equal(a.timeseries.values, b.timeseries.values)
        assert a.stream_key == b.stream_key == [9, 0, int(a.subject_id[-4:])]
    for subject in dataset.subjects:
        if subject.label == "Y":
            np.testing.assert_array_equal(subject.timeseries.values.prod(axis=0), 1.0)


def test_gen_dataset_only_y():
    dataset = gen_dataset(0, 4, 5, seed=1)
    assert {s.label for s in dataset.subjects} == {"Y"}


def test_subject_does_not_depend_on_cohort_size():
    small = gen_dataset(2, 0, 10, seed=4)
    large = gen_dataset(5, 0, 10, seed=4)
    np.testing.assert_array_equal(small.subjects[1].timeseries.values, large.subjects[1].timeseries.values)


def test_cohort_standin_shape_and_labels():
    dataset = gen_cohort_standin(n_case=4, n_control=5, m=12, n=20, seed=2)
    assert dataset.count(CASE_LABEL) == 4 and dataset.count(CONTROL_LABEL) == 5
    assert dataset.positive_label == CASE_LABEL
    assert dataset.labels_pm1()[:5] == [-1] * 5
    for subject in dataset.subjects:
        values = subject.timeseries.values
        assert values.shape == (12, 20)
        np.testing.assert_array_equal(values, np.round(values))
        assert np.max(np.abs(values)) <= 4


def test_cohort_standin_cases_carry_parity_sign():
    dataset = gen_cohort_standin(n_case=3, n_control=0, m=9, n=20, seed=6, triple_count=2)
    triples = coupled_triples(9, 6, 2)
    for subject in dataset.subjects:
        values = subject.timeseries.values
        for a, b, c in triples:
            product = values[a] * values[b]
            nonzero = (product != 0) & (values[c] != 0)
            np.testing.assert_array_equal(np.sign(values[c][nonzero]), np.sign(product[nonzero]))


# ===== Cliente CSV =====


def test_csv_default_orientation_and_selection(tmp_path):
    path = tmp_path / "subject.csv"
    rows = [",".join(str(float(r * 10 + c)) for c in range(30)) for r in range(8)]
    path.write_text("\n".join(rows) + "\n")
    ts = ingest_timeseries(path, (2, 5), 20)
    assert ts.values.shape == (4, 20)
    assert ts.values[0, 0] == 10.0
    assert ts.roi_labels() == ["2", "3", "4", "5"]


def test_csv_label_column_and_transpose(tmp_path):
    labeled = tmp_path / "labeled.csv"
    labeled.write_text("ROI_A,1,2,3\nROI_B,4,5,6\n")
    ts = timeseries_csv_client.read(labeled)
    assert ts.labels == ["ROI_A", "ROI_B"]
    np.testing.assert_array_equal(ts.values, [[1, 2, 3], [4, 5, 6]])

    transposed = tmp_path / "transposed.csv"
    transposed.write_text("A,B\n1,4\n2,5\n3,6\n")
    ts = timeseries_csv_client.read(transposed, transpose=True)
    assert ts.labels == ["A", "B"]
    np.testing.assert_array_equal(ts.values, [[1, 2, 3], [4, 5, 6]])


@pytest.mark.parametrize(
    "content, fragment",
    [
        ("1,2,3\n4,5\n", ":2"),
        ("1,2,3\n4,x,6\n", ":2:2"),
        ("1,2,3\n4,nan,6\n", ":2:2"),
        ("", "vacío"),
    ],
)
def test_csv_parse_errors_name_location(tmp_path, content, fragment):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    with pytest.raises(ParseError) as info:
        ingest_timeseries(path)
    assert fragment in str(info.value)


def test_csv_empty_roi_selection(tmp_path):
    path = tmp_path / "small.csv"
    path.write_text("1,2\n3,4\n")
    with pytest.raises(ParseError):
        ingest_timeseries(path, (2, 3))


def test_csv_format_is_exact(tmp_path):
    ts = TimeSeriesMatrix(values=[[0.1, -2.0], [1e-17, 3.0]])
    path = tmp_path / "exact.csv"
    path.write_text(timeseries_csv_client.format(ts))
    np.testing.assert_array_equal(timeseries_csv_client.read(path).values, ts.values)


# ===== Directorio de cohorte =====


def test_dataset_store_round_trip(tmp_path):
    dataset = gen_dataset(2, 2, 6, seed=3)
    manifest_path = dataset_store_client.write(dataset, tmp_path / "cohort", config={"seed": 3})
    assert manifest_path.name == "manifest.json"
    assert len(list((tmp_path / "cohort").glob("subject_*.csv"))) == 4

    restored = dataset_store_client.read(tmp_path / "cohort")
    assert [s.label for s in restored.subjects] == ["X", "X", "Y", "Y"]
    assert restored.positive_label == "Y"
    for a, b in zip(dataset.subjects, restored.subjects):
        np.testing.assert_array_equal(a.timeseries.values, b.timeseries.values)
        assert a.stream_key == b.stream_key
    assert dataset_store_client.read_manifest(tmp_path / "cohort").config == {"seed": 3}


def test_dataset_store_rejects_bad_manifest(tmp_path):
    (tmp_path / "manifest.json").write_text('{"samples_per_subject": 0, "subjects": []}')
    with pytest.raises(ParseError):
        dataset_store_client.read(tmp_path)


def test_csv_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "latin1.csv"
    path.write_bytes(b"1,2,3\n4,\xff,6\n")
    with pytest.raises(ParseError) as info:
        ingest_timeseries(path)
    assert "byte 8" in str(info.value)


def test_dataset_store_rejects_invalid_utf8_manifest(tmp_path):
    (tmp_path / "manifest.json").write_bytes(b'{"samples_per_subject": 20, "cohort": "\xfe"}')
    with pytest.raises(ParseError):
        dataset_store_client.read_manifest(tmp_path)


def test_dataset_store_rejects_mixed_subject_shapes(tmp_path):
    dataset_store_client.write(gen_dataset(2, 2, 20, seed=0), tmp_path)
    (tmp_path / "subject_0003.csv").write_text("\n".join(["1,2,3"] * 4) + "\n")
    with pytest.raises(ParseError) as info:
        dataset_store_client.read(tmp_path)
    assert "subject_0003.csv" in str(info.value)


@pytest.mark.skipif(os.name != "posix", reason="fsync de directorios solo en POSIX")
def test_atomic_write_syncs_file_and_directory(tmp_path, monkeypatch):
    synced = []
    real_fsync = os.fsync

    def recording_fsync(fd):
        synced.append(stat.S_ISDIR(os.fstat(fd).st_mode))
        real_fsync(fd)

    monkeypatch.setattr(os, "fsync", recording_fsync)
    target = write_text_atomic(tmp_path / "nested" / "out.txt", "hola\n")
    assert target.read_text() == "hola\n"
    assert synced == [False, True]
    assert [p.name for p in (tmp_path / "nested").iterdir()] == ["out.txt"]
