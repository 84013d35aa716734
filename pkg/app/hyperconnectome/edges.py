"""Hiperaristas significativas y reducción del tensor a matriz de pares."""

from __future__ import annotations

import logging

import numpy as np

from app.core.tuple_ranking import all_tuples, strict_tuple_mask
from app.models.hyperconnectome_models import HyperConnectome, HyperedgeList

logger = logging.getLogger(__name__)

# Umbral por defecto de las exportaciones: 2^8
DEFAULT_EDGE_THRESHOLD = 256.0


def significant_edges(
    hc: HyperConnectome,
    threshold: float = DEFAULT_EDGE_THRESHOLD,
    *,
    include_degenerate: bool = True,
) -> HyperedgeList:
    """Devuelve las tuplas con peso estrictamente mayor que `threshold`.

    Orden: peso descendente; los empates se resuelven por rango ascendente.
    """
    weights = hc.tensor.weights
    table = all_tuples(hc.m, hc.d)
    mask = weights > threshold
    if not include_degenerate:
        mask &= strict_tuple_mask(hc.m, hc.d)

    ranks = np.flatnonzero(mask)
    order = ranks[np.lexsort((ranks, -weights[ranks]))]
    edges = [(tuple(int(i) for i in table[r]), float(weights[r])) for r in order]

    logger.debug(f"{len(edges)} hiperaristas con peso > {threshold}")
    return HyperedgeList(edges=edges, threshold=float(threshold))


def pairwise_reduce(hc: HyperConnectome, *, include_degenerate: bool = True) -> np.ndarray:
    """Suma los pesos de todas las hiperaristas comunes a cada par de ROIs.

    - (a, b), a != b: suma de los pesos de cada tupla almacenada que contiene
      a `a` y a `b` (cada tupla cuenta una sola vez).
    - (a, a): suma de los pesos de las tuplas que contienen `a` al menos dos veces.

    Returns:
        np.ndarray: Matriz m x m exactamente simétrica.
    """
    m = hc.m
    table = all_tuples(m, hc.d)
    weights = hc.tensor.weights
    if not include_degenerate:
        keep = strict_tuple_mask(m, hc.d)
        table = table[keep]
        weights = weights[keep]

    multiplicity = np.zeros((table.shape[0], m), dtype=np.intp)
    rows = np.repeat(np.arange(table.shape[0]), hc.d)
    np.add.at(multiplicity, (rows, table.ravel()), 1)

    present = (multiplicity > 0).astype(np.float64)
    shared = (present * weights[:, None]).T @ present
    upper = np.triu(shared, k=1)
    repeated = (multiplicity >= 2).astype(np.float64).T @ weights

    return upper + upper.T + np.diag(repeated)
