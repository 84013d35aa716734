"""Entropías plug-in exactas y oráculos de correlación total.

Logaritmo natural en todo el módulo. Convención 0·log 0 = 0.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Hashable, Mapping, Sequence, Tuple

import numpy as np
from scipy.special import rel_entr
from scipy.stats import entropy as scipy_entropy

from app.core.errors import ContractViolationError


def _as_rows(rows: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    try:
        table = np.asarray(rows, dtype=np.float64)
    except ValueError as exc:
        raise ContractViolationError("Las filas deben tener el mismo largo") from exc
    if table.ndim == 1:
        table = table[None, :]
    if table.ndim != 2 or table.shape[0] < 1 or table.shape[1] < 1:
        raise ContractViolationError(f"Se esperaban k >= 1 filas alineadas con n >= 1, forma {table.shape}")
    return table


def _counts(values: np.ndarray) -> np.ndarray:
    _, counts = np.unique(values, return_counts=True, axis=0 if values.ndim > 1 else None)
    return counts


def entropy_exact(x: Sequence[float] | np.ndarray) -> float:
    """Entropía plug-in sobre los valores distintos observados.

    Raises:
        ContractViolationError: Si el vector está vacío.
    """
    values = np.asarray(x, dtype=np.float64).ravel()
    if values.size < 1:
        raise ContractViolationError("La entropía requiere n >= 1")
    return float(scipy_entropy(_counts(values)))


def joint_entropy_exact(rows: Sequence[Sequence[float]] | np.ndarray) -> float:
    """Entropía conjunta plug-in sobre las k-tuplas alineadas distintas.

    Raises:
        ContractViolationError: Si las filas tienen largos distintos.
    """
    table = _as_rows(rows)
    return float(scipy_entropy(_counts(table.T)))


def total_correlation_exact(rows: Sequence[Sequence[float]] | np.ndarray) -> float:
    """Correlación total plug-in: suma de entropías marginales menos la conjunta."""
    table = _as_rows(rows)
    marginals = sum(entropy_exact(row) for row in table)
    return float(marginals - joint_entropy_exact(table))


def total_correlation_kl_exact(rows: Sequence[Sequence[float]] | np.ndarray) -> float:
    """Correlación total en forma de divergencia KL: Σ p log(p / Π p_k).

    Suma sobre las tuplas alineadas distintas observadas; coincide
    numéricamente con `total_correlation_exact`.
    """
    table = _as_rows(rows)
    n = table.shape[1]
    cells, joint_counts = np.unique(table.T, axis=0, return_counts=True)
    joint = joint_counts / n

    product = np.ones(cells.shape[0])
    for k, row in enumerate(table):
        values, counts = np.unique(row, return_counts=True)
        lookup = dict(zip(values.tolist(), (counts / n).tolist()))
        product *= np.array([lookup[v] for v in cells[:, k].tolist()])

    return float(np.sum(rel_entr(joint, product)))


def enumerate_total_correlation(pmf: Mapping[Tuple[Hashable, ...], float]) -> float:
    """Evalúa Σ p log(p / Π p_k) sobre una distribución conjunta finita explícita.

    Args:
        pmf: Mapa de tuplas de valores a probabilidades.

    Returns:
        float: Correlación total exacta por enumeración completa.

    Raises:
        ContractViolationError: Si hay probabilidades negativas, la suma no es
            1 (tolerancia 1e-12) o las tuplas tienen largos distintos.
    """
    if not pmf:
        raise ContractViolationError("La distribución está vacía")
    lengths = {len(key) for key in pmf}
    if len(lengths) != 1:
        raise ContractViolationError("Todas las tuplas deben tener el mismo largo")
    probabilities = [float(p) for p in pmf.values()]
    if any(p < 0 or not np.isfinite(p) for p in probabilities):
        raise ContractViolationError("Las probabilidades deben ser finitas y >= 0")
    if abs(sum(probabilities) - 1.0) > 1e-12:
        raise ContractViolationError(f"Las probabilidades suman {sum(probabilities)!r}, no 1")

    (k,) = lengths
    marginals: list[Dict[Hashable, float]] = [defaultdict(float) for _ in range(k)]
    for key, p in pmf.items():
        for position, value in enumerate(key):
            marginals[position][value] += float(p)

    total = 0.0
    for key, p in pmf.items():
        product = 1.0
        for position, value in enumerate(key):
            product *= marginals[position][value]
        total += float(rel_entr(float(p), product))
    return float(total)


def gaussian_tc_closed_form(correlation_matrix: np.ndarray) -> float:
    """Correlación total de una gaussiana con matriz de correlación R: -½ ln det R.

    Raises:
        ContractViolationError: Si R no es simétrica, no tiene diagonal
            unitaria, tiene |ρ| >= 1 - 1e-9 o no es definida positiva.
    """
    r = np.asarray(correlation_matrix, dtype=np.float64)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ContractViolationError(f"R debe ser cuadrada, forma {r.shape}")
    if not np.array_equal(r, r.T):
        raise ContractViolationError("R debe ser simétrica")
    if not np.all(np.diag(r) == 1.0):
        raise ContractViolationError("R debe tener diagonal unitaria")
    off_diagonal = r[~np.eye(r.shape[0], dtype=bool)]
    if off_diagonal.size and np.max(np.abs(off_diagonal)) >= 1.0 - 1e-9:
        raise ContractViolationError("Correlación singular: |ρ| >= 1 - 1e-9")
    try:
        np.linalg.cholesky(r)
    except np.linalg.LinAlgError as exc:
        raise ContractViolationError("R no es definida positiva") from exc

    _, logdet = np.linalg.slogdet(r)
    return float(-0.5 * logdet)
