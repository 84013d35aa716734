"""Vectorización de conectomas e hiper-conectomas."""

from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

import numpy as np

from app.core.errors import require
from app.core.tuple_ranking import strict_tuple_mask
from app.estimators.correlation import connectome
from app.hyperconnectome.builder import build_hyperconnectome
from app.models.core_models import ConnectomeMatrix, TimeSeriesMatrix
from app.models.estimator_models import EstimatorConfig
from app.models.hyperconnectome_models import HyperConnectome
from app.models.learn_models import FeatureKind, FeatureSchema, FeatureVector
from app.utils.parallel import run_ordered

logger = logging.getLogger(__name__)


def vectorize_graph(cm: ConnectomeMatrix) -> FeatureVector:
    """Triángulo superior estricto, fila por fila; largo m(m-1)/2."""
    rows, cols = np.triu_indices(cm.m, k=1)
    return FeatureVector(
        values=cm.entries[rows, cols],
        feature_schema=FeatureSchema(kind="graph", m=cm.m),
    )


def vectorize_hypergraph(hc: HyperConnectome, *, include_degenerate: bool = True) -> FeatureVector:
    """Pesos del tensor en orden de rango; sin degeneradas solo quedan las tuplas estrictas."""
    weights = hc.tensor.weights
    if not include_degenerate:
        weights = weights[strict_tuple_mask(hc.tensor.m, hc.tensor.d)]
    return FeatureVector(
        values=weights,
        feature_schema=FeatureSchema(
            kind="hypergraph", m=hc.tensor.m, d=hc.tensor.d, include_degenerate=include_degenerate
        ),
    )


def _subject_features(job: Tuple[TimeSeriesMatrix, FeatureKind, EstimatorConfig]) -> np.ndarray:
    ts, kind, config = job
    if kind == "graph":
        return vectorize_graph(connectome(ts)).values
    hc = build_hyperconnectome(ts, config.d, config.epsilon, config.variant, log_base=config.log_base)
    return vectorize_hypergraph(hc, include_degenerate=config.include_degenerate).values


def build_feature_matrix(
    subjects: Sequence[TimeSeriesMatrix],
    feature_kind: FeatureKind,
    config: EstimatorConfig = EstimatorConfig(),
    *,
    n_jobs: int = 1,
) -> np.ndarray:
    """Apila los vectores de features de cada sujeto, en el orden recibido.

    Args:
        subjects: Series temporales de los sujetos.
        feature_kind: "graph" o "hypergraph".
        config: Parámetros del estimador (solo para hipergrafos).
        n_jobs: Procesos para repartir sujetos.

    Returns:
        np.ndarray: Matriz (sujetos, features).

    Raises:
        ContractViolationError: Si los sujetos no tienen la misma cantidad de ROIs.
    """
    roi_counts = {ts.m for ts in subjects}
    require(len(roi_counts) <= 1, f"Los sujetos tienen cantidades de ROIs distintas: {sorted(roi_counts)}")
    jobs: List[Tuple[TimeSeriesMatrix, FeatureKind, EstimatorConfig]] = [
        (ts, feature_kind, config) for ts in subjects
    ]
    rows = run_ordered(_subject_features, jobs, n_jobs=n_jobs)
    matrix = np.vstack(rows) if rows else np.empty((0, 0))
    logger.info(f"🧮 Features '{feature_kind}': {matrix.shape[0]} sujetos x {matrix.shape[1]} columnas")
    return matrix
