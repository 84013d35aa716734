"""Partición entrenamiento/prueba y métricas de clasificación."""

from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np

from app.core.errors import InsufficientSamplesError, require
from app.models.simulation_models import SimDataset


def split(
    dataset: SimDataset | int,
    fraction: float,
    stream: np.random.Generator,
) -> Tuple[np.ndarray, np.ndarray]:
    """Partición aleatoria sin reemplazo en índices de entrenamiento y prueba.

    El entrenamiento recibe ceil(fraction·n) sujetos (el lado mayor en
    cantidades impares a 0.5); ambos lados quedan no vacíos. Los índices se
    devuelven ordenados.

    Raises:
        ContractViolationError: Si fraction no está en (0, 1).
        InsufficientSamplesError: Si hay menos de 2 sujetos.
    """
    n = dataset if isinstance(dataset, int) else len(dataset.subjects)
    require(0.0 < fraction < 1.0, f"La fracción debe estar en (0, 1), recibida {fraction}")
    if n < 2:
        raise InsufficientSamplesError(f"Se requieren al menos 2 sujetos para partir, hay {n}")

    n_train = min(max(math.ceil(fraction * n - 1e-9), 1), n - 1)
    order = stream.permutation(n)
    return np.sort(order[:n_train]), np.sort(order[n_train:])


def metrics(
    predicted: Sequence[int] | np.ndarray,
    truth: Sequence[int] | np.ndarray,
    positive_class: int = 1,
) -> Tuple[float, float]:
    """(accuracy, f1) respecto de la clase positiva; f1 = 0 si P + R = 0."""
    pred = np.asarray(predicted)
    true = np.asarray(truth)
    require(pred.shape == true.shape and pred.ndim == 1, "Predicciones y etiquetas de largos distintos")
    require(pred.shape[0] >= 1, "Se requiere al menos una predicción")

    accuracy = float(np.mean(pred == true))
    tp = int(np.sum((pred == positive_class) & (true == positive_class)))
    fp = int(np.sum((pred == positive_class) & (true != positive_class)))
    fn = int(np.sum((pred != positive_class) & (true == positive_class)))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    if precision + recall == 0.0:
        return accuracy, 0.0
    return accuracy, 2.0 * precision * recall / (precision + recall)
