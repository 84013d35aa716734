"""Pruebas de Pearson, conectoma, entropías exactas y oráculos cerrados."""

import logging
import math

import numpy as np
import pytest

from app.core.errors import ContractViolationError, DegenerateVarianceError, InsufficientSamplesError
from app.estimators import (
    connectome,
    entropy_exact,
    enumerate_total_correlation,
    gaussian_tc_closed_form,
    joint_entropy_exact,
    pearson,
    total_correlation_exact,
    total_correlation_kl_exact,
)
from app.models.core_models import TimeSeriesMatrix

LN2 = math.log(2.0)


# ===== Pearson y conectoma =====


def test_pearson_examples():
    x = np.array([1.0, 2.0, 3.0, 5.0])
    assert pearson(x, x) == pytest.approx(1.0, abs=1e-15)
    assert pearson(x, -x) == pytest.approx(-1.0, abs=1e-15)
    assert pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(0.98198, abs=1e-5)


def test_pearson_is_symmetric_and_bounded():
    rng = np.random.default_rng(7)
    for _ in range(200):
        x, y = rng.normal(size=(2, 12))
        value = pearson(x, y)
        assert value == pearson(y, x)
        assert abs(value) <= 1.0 + 1e-12


def test_pearson_errors():
    with pytest.raises(DegenerateVarianceError):
        pearson([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])
    with pytest.raises(ContractViolationError):
        pearson([1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(ContractViolationError):
        pearson([1.0], [2.0])


def test_connectome_single_variable():
    cm = connectome(TimeSeriesMatrix(values=[[1.0, 2.0, 3.0]]))
    np.testing.assert_array_equal(cm.entries, [[1.0]])


def test_connectome_duplicated_row_and_symmetry():
    rows = np.array([[1.0, 3.0, 2.0, 5.0], [1.0, 3.0, 2.0, 5.0], [0.0, 1.0, 0.0, 2.0]])
    cm = connectome(TimeSeriesMatrix(values=rows))
    assert cm.entries[0, 1] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_array_equal(cm.entries, cm.entries.T)
    np.testing.assert_array_equal(np.diag(cm.entries), 1.0)


def test_connectome_constant_row_maps_to_zero_with_warning(caplog):
    rows = np.array([[1.0, 1.0, 1.0], [1.0, 2.0, 3.0]])
    with caplog.at_level(logging.WARNING):
        cm = connectome(TimeSeriesMatrix(values=rows))
    assert cm.entries[0, 1] == 0.0
    assert any("Varianza cero" in record.message for record in caplog.records)


def test_connectome_requires_two_samples():
    with pytest.raises(InsufficientSamplesError):
        connectome(TimeSeriesMatrix(values=[[1.0], [2.0]]))


def test_connectome_of_independent_rows_is_near_zero():
    """Filas Rademacher independientes: |correlación| media cerca de 0."""
    rng = np.random.default_rng(11)
    values = []
    for _ in range(1000):
        rows = rng.choice([-1.0, 1.0], size=(3, 20))
        values.append(connectome(TimeSeriesMatrix(values=rows)).entries[np.triu_indices(3, k=1)])
    assert abs(np.mean(values)) < 0.03


# ===== Entropías =====


def test_entropy_examples():
    assert entropy_exact([4.0, 4.0, 4.0]) == 0.0
    assert entropy_exact([-1.0, 1.0]) == pytest.approx(LN2, abs=1e-12)
    assert entropy_exact([1, 1, 2, 2, 3, 3]) == pytest.approx(math.log(3.0), abs=1e-12)


def test_joint_entropy_examples():
    x = [1.0, 2.0, 2.0, 3.0]
    assert joint_entropy_exact([x]) == pytest.approx(entropy_exact(x), abs=1e-15)
    assert joint_entropy_exact([x, x]) == pytest.approx(entropy_exact(x), abs=1e-15)
    y_rows = np.array([[1, -1, -1, 1], [1, -1, 1, -1], [1, 1, -1, -1]], dtype=float)
    assert joint_entropy_exact(y_rows) == pytest.approx(math.log(4.0), abs=1e-12)


def test_joint_entropy_rejects_ragged_rows():
    with pytest.raises(ContractViolationError):
        joint_entropy_exact([[1.0, 2.0], [1.0]])


def test_total_correlation_examples():
    assert total_correlation_exact([[1.0, 2.0, 3.0]]) == 0.0
    coins = [[0, 0, 1, 1], [0, 1, 0, 1]]
    assert total_correlation_exact(coins) == pytest.approx(0.0, abs=1e-12)
    # las 4 ternas legales de Y, una vez cada una
    y_rows = [[1, -1, -1, 1], [1, -1, 1, -1], [1, 1, -1, -1]]
    assert total_correlation_exact(y_rows) == pytest.approx(LN2, abs=1e-12)
    assert total_correlation_kl_exact(y_rows) == pytest.approx(LN2, abs=1e-12)
    assert total_correlation_kl_exact([[1.0, 2.0]]) == 0.0


def test_sum_of_entropies_identity_on_random_distributions():
    """Σ H - H conjunta coincide con la forma KL en 200 muestras discretas."""
    rng = np.random.default_rng(2024)
    for _ in range(200):
        k = int(rng.integers(1, 4))
        support = int(rng.integers(1, 5))
        rows = rng.integers(0, support, size=(k, int(rng.integers(1, 40))))
        assert abs(total_correlation_exact(rows) - total_correlation_kl_exact(rows)) < 1e-10


def test_plugin_total_correlation_is_non_negative():
    rng = np.random.default_rng(99)
    for _ in range(1000):
        k = int(rng.integers(2, 4))
        rows = rng.integers(0, int(rng.integers(2, 5)), size=(k, int(rng.integers(1, 30))))
        assert total_correlation_exact(rows) >= -1e-12


# ===== Oráculos =====


def test_enumerate_total_correlation_examples():
    coins = {(a, b): 0.25 for a in (0, 1) for b in (0, 1)}
    assert enumerate_total_correlation(coins) == pytest.approx(0.0, abs=1e-15)
    coupled = {(0, 0): 0.5, (1, 1): 0.5}
    assert enumerate_total_correlation(coupled) == pytest.approx(LN2, abs=1e-15)
    y_pmf = {(1, 1, 1): 0.25, (-1, -1, 1): 0.25, (-1, 1, -1): 0.25, (1, -1, -1): 0.25}
    assert enumerate_total_correlation(y_pmf) == pytest.approx(LN2, abs=1e-12)


@pytest.mark.parametrize(
    "pmf",
    [{}, {(0,): 0.5}, {(0,): 1.5, (1,): -0.5}, {(0,): 0.5, (1, 1): 0.5}],
)
def test_enumerate_total_correlation_rejects_invalid_pmf(pmf):
    with pytest.raises(ContractViolationError):
        enumerate_total_correlation(pmf)


def test_gaussian_closed_form():
    assert gaussian_tc_closed_form(np.eye(3)) == pytest.approx(0.0, abs=1e-15)
    r = np.array([[1.0, 0.5], [0.5, 1.0]])
    assert gaussian_tc_closed_form(r) == pytest.approx(0.14384, abs=1e-5)
    with pytest.raises(ContractViolationError):
        gaussian_tc_closed_form(np.array([[1.0, 1.0], [1.0, 1.0]]))
    with pytest.raises(ContractViolationError):
        gaussian_tc_closed_form(np.array([[1.0, 0.2], [0.3, 1.0]]))
