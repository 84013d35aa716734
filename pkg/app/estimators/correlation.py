"""Correlación de Pearson muestral y conectoma de un sujeto."""

from __future__ import annotations

import logging

import numpy as np

from app.core.errors import (
    ContractViolationError,
    DegenerateVarianceError,
    InsufficientSamplesError,
)
from app.models.core_models import ConnectomeMatrix, TimeSeriesMatrix

logger = logging.getLogger(__name__)


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    """Coeficiente de correlación de Pearson muestral.

    Args:
        x: Vector de muestras de largo n.
        y: Vector de muestras de largo n.

    Returns:
        float: Correlación en [-1, 1], simétrica en sus argumentos.

    Raises:
        ContractViolationError: Si los largos difieren o n < 2.
        DegenerateVarianceError: Si alguno de los vectores es constante.
    """
    xs = np.asarray(x, dtype=np.float64)
    ys = np.asarray(y, dtype=np.float64)
    if xs.ndim != 1 or xs.shape != ys.shape:
        raise ContractViolationError(f"Vectores de largos distintos: {xs.shape} vs {ys.shape}")
    if xs.shape[0] < 2:
        raise ContractViolationError("Pearson requiere al menos 2 muestras")

    xc = xs - xs.mean()
    yc = ys - ys.mean()
    sxx = float(np.dot(xc, xc))
    syy = float(np.dot(yc, yc))
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateVarianceError("Varianza muestral cero en uno de los vectores")

    value = float(np.dot(xc, yc)) / np.sqrt(sxx * syy)
    return float(np.clip(value, -1.0, 1.0))


def connectome(ts: TimeSeriesMatrix) -> ConnectomeMatrix:
    """Construye la matriz de correlación de Pearson entre todas las filas.

    Los pares con varianza cero se mapean a 0 con un warning, para no
    descartar un sujeto completo por un canal plano.

    Raises:
        InsufficientSamplesError: Si n < 2.
    """
    if ts.n < 2:
        raise InsufficientSamplesError(f"El conectoma requiere n >= 2 muestras (n={ts.n})")

    labels = ts.roi_labels()
    entries = np.eye(ts.m)
    for i in range(ts.m):
        for j in range(i + 1, ts.m):
            try:
                value = pearson(ts.values[i], ts.values[j])
            except DegenerateVarianceError:
                logger.warning(
                    f"⚠️ Varianza cero en el par ({labels[i]}, {labels[j]}): correlación = 0"
                )
                value = 0.0
            entries[i, j] = value
            entries[j, i] = value

    return ConnectomeMatrix(entries=entries)
