"""Construcción del hiper-conectoma de un sujeto."""

from __future__ import annotations

import logging
from typing import Optional

from app.estimators.total_correlation import alg1_total_correlation, to_bits
from app.models.core_models import SymmetricTensor, TimeSeriesMatrix
from app.models.estimator_models import EpsilonThreshold, EstimatorVariant, LogBase
from app.models.hyperconnectome_models import HyperConnectome

logger = logging.getLogger(__name__)


def build_hyperconnectome(
    ts: TimeSeriesMatrix,
    d: int,
    eps: EpsilonThreshold | float,
    variant: EstimatorVariant = EstimatorVariant.PAPER_TUPLE_SUM,
    *,
    log_base: LogBase = "nat",
    source_id: Optional[str] = None,
    n_jobs: int = 1,
) -> HyperConnectome:
    """Calcula el tensor de correlación total y lo envuelve con sus metadatos.

    Args:
        ts: Serie temporal del sujeto.
        d: Orden de las hiperaristas.
        eps: Radio de la bola-ε.
        variant: Variante del estimador.
        log_base: "nat" o "bit"; en bits los pesos se dividen por ln 2.
        source_id: Identificador opcional del sujeto.
        n_jobs: Workers para el barrido de tuplas.

    Returns:
        HyperConnectome: Resultado determinista para entradas fijas.
    """
    epsilon = eps.epsilon if isinstance(eps, EpsilonThreshold) else float(eps)
    tensor = alg1_total_correlation(ts, d, epsilon, variant, n_jobs=n_jobs)
    if log_base == "bit":
        tensor = SymmetricTensor(m=tensor.m, d=tensor.d, weights=to_bits(tensor.weights))

    hc = HyperConnectome(
        tensor=tensor,
        epsilon=epsilon,
        d=d,
        variant=EstimatorVariant(variant),
        roi_labels=ts.roi_labels(),
        source_id=source_id,
        log_base=log_base,
    )
    logger.debug(f"Hiper-conectoma {source_id or '<sin id>'}: {tensor.weights.shape[0]} pesos")
    return hc
