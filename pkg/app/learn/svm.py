"""SVM lineal entrenado por subgradiente estocástico (esquema tipo Pegasos).

Se minimiza λ/2·(‖w‖² + b²) + promedio de max(0, 1 - y·(w·z + b)) sobre las
features estandarizadas z. El sesgo viaja como una feature constante
aumentada. Paso 1/(λ·t), proyección a la bola de radio 1/√λ y promedio de
los iterados de la segunda mitad de las épocas.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from app.core.errors import ContractViolationError, DegenerateLabelsError, require
from app.models.learn_models import FeatureSchema, FeatureVector, LinearModel, SvmConfig
from app.utils.random_streams import derive_stream

logger = logging.getLogger(__name__)

SVM_STREAM = 3

FeatureInput = np.ndarray | Sequence[FeatureVector]


def _as_matrix(features: FeatureInput) -> Tuple[np.ndarray, Optional[FeatureSchema]]:
    """Convierte una lista de FeatureVector (o una matriz) en matriz (n, p)."""
    if isinstance(features, np.ndarray):
        matrix = np.asarray(features, dtype=np.float64)
        if matrix.ndim == 1:
            matrix = matrix[np.newaxis, :]
        return matrix, None

    vectors = list(features)
    require(len(vectors) >= 1, "Se requiere al menos un vector de features")
    schema = vectors[0].feature_schema
    if any(v.feature_schema != schema for v in vectors):
        raise ContractViolationError("Los vectores de features tienen esquemas distintos")
    return np.vstack([v.values for v in vectors]), schema


def _pm1(labels: Sequence[int] | np.ndarray, count: int) -> np.ndarray:
    y = np.asarray(labels, dtype=np.float64)
    require(y.ndim == 1 and y.shape[0] == count, f"Se esperaban {count} etiquetas, hay {y.shape}")
    require(bool(np.all(np.abs(y) == 1.0)), "Las etiquetas deben ser +1 o -1")
    return y


def svm_train(
    features: FeatureInput,
    labels: Sequence[int] | np.ndarray,
    config: SvmConfig = SvmConfig(),
    *,
    stream: Optional[np.random.Generator] = None,
) -> LinearModel:
    """Entrena el modelo lineal.

    Args:
        features: Matriz (n, p) o lista de FeatureVector con el mismo esquema.
        labels: Etiquetas ±1.
        config: Épocas y λ.
        stream: Stream del orden de ejemplos; por defecto (config.seed, 3).

    Returns:
        LinearModel: Idéntico bit a bit para datos, config y stream fijos.

    Raises:
        DegenerateLabelsError: Si hay una sola clase.
        ContractViolationError: Si las entradas no son consistentes.
    """
    matrix, schema = _as_matrix(features)
    n, p = matrix.shape
    y = _pm1(labels, n)
    if np.all(y == y[0]):
        raise DegenerateLabelsError(f"El entrenamiento tiene una sola clase ({int(y[0]):+d})")
    require(bool(np.all(np.isfinite(matrix))), "Las features contienen valores no finitos")

    mean = matrix.mean(axis=0)
    constant = np.ptp(matrix, axis=0) == 0.0
    scale = np.where(constant, 1.0, matrix.std(axis=0))
    standardized = (matrix - mean) / scale
    standardized[:, constant] = 0.0
    augmented = np.hstack([standardized, np.ones((n, 1))])

    order_stream = stream if stream is not None else derive_stream(config.seed, SVM_STREAM)
    lam = config.lam
    radius = 1.0 / np.sqrt(lam)
    averaging_from = config.epochs // 2

    w = np.zeros(p + 1)
    w_sum = np.zeros(p + 1)
    averaged = 0
    step = 0
    for epoch in range(config.epochs):
        for i in order_stream.permutation(n):
            step += 1
            eta = 1.0 / (lam * step)
            margin = y[i] * float(augmented[i] @ w)
            w *= 1.0 - eta * lam
            if margin < 1.0:
                w += (eta * y[i]) * augmented[i]
            norm = float(np.linalg.norm(w))
            if norm > radius:
                w *= radius / norm
            if epoch >= averaging_from:
                w_sum += w
                averaged += 1

    final = w_sum / averaged
    weights = final[:p].copy()
    weights[constant] = 0.0
    model = LinearModel(
        weights=weights, bias=float(final[p]), mean=mean, scale=scale, feature_schema=schema
    )
    logger.debug(f"SVM entrenado: {n} ejemplos, {p} features, {config.epochs} épocas, λ={lam}")
    return model


def svm_predict(model: LinearModel, features: FeatureInput) -> np.ndarray:
    """Signo del puntaje estandarizado más el sesgo; un puntaje exactamente 0 da +1.

    Raises:
        ContractViolationError: Si el esquema no coincide con el del modelo.
    """
    matrix, schema = _as_matrix(features)
    if schema is not None and model.feature_schema is not None and schema != model.feature_schema:
        raise ContractViolationError(
            f"Esquema de features {schema.kind}(m={schema.m}) distinto al del modelo"
        )
    scores = model.decision_function(matrix)
    return np.where(scores >= 0.0, 1, -1).astype(np.int64)


def hinge_objective(
    model: LinearModel, features: FeatureInput, labels: Sequence[int] | np.ndarray, lam: float = 1e-4
) -> float:
    """λ/2·(‖w‖² + b²) + hinge promedio: la función que minimiza `svm_train`."""
    matrix, _ = _as_matrix(features)
    y = _pm1(labels, matrix.shape[0])
    losses = np.maximum(0.0, 1.0 - y * model.decision_function(matrix))
    penalty = 0.5 * lam * (float(model.weights @ model.weights) + model.bias**2)
    return penalty + float(losses.mean())
