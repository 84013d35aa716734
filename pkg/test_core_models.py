"""Pruebas de los modelos base: series, conectomas y tensores simétricos."""

import numpy as np
import pytest
from pydantic import ValidationError

from app.models.core_models import ConnectomeMatrix, SymmetricTensor, TimeSeriesMatrix
from app.models.estimator_models import EpsilonThreshold, EstimatorConfig, EstimatorVariant


def test_timeseries_is_frozen_copy():
    raw = np.array([[1.0, 2.0], [3.0, 4.0]])
    ts = TimeSeriesMatrix(values=raw)
    raw[0, 0] = 99.0
    assert ts.values[0, 0] == 1.0
    assert (ts.m, ts.n) == (2, 2)
    with pytest.raises(ValueError):
        ts.values[0, 0] = 5.0


def test_timeseries_default_labels_are_one_based():
    ts = TimeSeriesMatrix(values=np.zeros((3, 4)))
    assert ts.roi_labels() == ["1", "2", "3"]
    named = TimeSeriesMatrix(values=np.zeros((2, 4)), labels=["A", "B"])
    assert named.roi_labels() == ["A", "B"]


@pytest.mark.parametrize(
    "values",
    [np.array([[1.0, np.nan]]), np.array([[np.inf, 0.0]]), np.zeros((0, 3)), np.zeros(4)],
)
def test_timeseries_rejects_invalid_values(values):
    with pytest.raises(ValidationError):
        TimeSeriesMatrix(values=values)


def test_timeseries_rejects_label_mismatch():
    with pytest.raises(ValidationError):
        TimeSeriesMatrix(values=np.zeros((2, 3)), labels=["solo"])


def test_connectome_matrix_invariants():
    ConnectomeMatrix(entries=np.array([[1.0, 0.5], [0.5, 1.0]]))
    with pytest.raises(ValidationError):
        ConnectomeMatrix(entries=np.array([[1.0, 0.5], [0.4, 1.0]]))
    with pytest.raises(ValidationError):
        ConnectomeMatrix(entries=np.array([[0.9, 0.5], [0.5, 1.0]]))
    with pytest.raises(ValidationError):
        ConnectomeMatrix(entries=np.array([[1.0, 1.5], [1.5, 1.0]]))


def test_symmetric_tensor_get_is_permutation_invariant():
    tensor = SymmetricTensor(m=3, d=3, weights=np.arange(10, dtype=float))
    assert tensor.get((0, 1, 2)) == tensor.get((2, 0, 1)) == 4.0
    assert tensor.get((2, 2, 2)) == 9.0


def test_symmetric_tensor_length_is_checked():
    with pytest.raises(ValidationError):
        SymmetricTensor(m=3, d=3, weights=np.zeros(9))


def test_estimator_variant_strings():
    assert [v.value for v in EstimatorVariant] == ["paper", "plugin", "aligned"]
    assert EstimatorVariant("aligned") is EstimatorVariant.ALIGNED_RESUBSTITUTION


def test_epsilon_and_estimator_config_ranges():
    with pytest.raises(ValidationError):
        EpsilonThreshold(epsilon=0.0)
    with pytest.raises(ValidationError):
        EstimatorConfig(d=5)
    config = EstimatorConfig()
    assert (config.epsilon, config.d, config.variant) == (1e-5, 3, EstimatorVariant.PAPER_TUPLE_SUM)
