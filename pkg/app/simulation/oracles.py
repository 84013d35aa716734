"""Oráculos poblacionales exactos de la construcción de paridad.

Se enumeran los 8 resultados equiprobables de (X1, X2, X3) con aritmética
racional exacta.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import sqrt
from typing import Dict, Tuple

from app.core.errors import require
from app.estimators.entropy import enumerate_total_correlation

_OUTCOMES = list(product((-1, 1), repeat=3))
_WEIGHT = Fraction(1, len(_OUTCOMES))


def _y_of(x: Tuple[int, int, int]) -> Tuple[int, int, int]:
    x1, x2, x3 = x
    return (x1 * x2, x2 * x3, x3 * x1)


def _exact_pmf(transform) -> Dict[Tuple[int, ...], Fraction]:
    pmf: Dict[Tuple[int, ...], Fraction] = {}
    for outcome in _OUTCOMES:
        key = transform(outcome)
        pmf[key] = pmf.get(key, Fraction(0)) + _WEIGHT
    return pmf


def x_distribution_pmf() -> Dict[Tuple[int, ...], float]:
    """Distribución conjunta de X: 8 ternas con probabilidad 1/8."""
    return {k: float(v) for k, v in _exact_pmf(tuple).items()}


def y_distribution_pmf() -> Dict[Tuple[int, ...], float]:
    """Distribución conjunta de Y: 4 ternas legales con probabilidad 1/4."""
    return {k: float(v) for k, v in _exact_pmf(_y_of).items()}


def _exact_corr(pmf: Dict[Tuple[int, ...], Fraction], i: int, j: int) -> float:
    mean_i = sum(p * key[i] for key, p in pmf.items())
    mean_j = sum(p * key[j] for key, p in pmf.items())
    cov = sum(p * (key[i] - mean_i) * (key[j] - mean_j) for key, p in pmf.items())
    var_i = sum(p * (key[i] - mean_i) ** 2 for key, p in pmf.items())
    var_j = sum(p * (key[j] - mean_j) ** 2 for key, p in pmf.items())
    return float(cov) / sqrt(float(var_i * var_j))


def oracle_pairwise_corr_y(i: int = 0, j: int = 1) -> float:
    """corr(Y_i, Y_j) poblacional exacta; 0 para i != j y 1 para i == j."""
    require(0 <= i < 3 and 0 <= j < 3, f"Índices fuera de rango: ({i}, {j})")
    return _exact_corr(_exact_pmf(_y_of), i, j)


def oracle_pairwise_corr_x(i: int = 0, j: int = 1) -> float:
    """corr(X_i, X_j) poblacional exacta (control independiente)."""
    require(0 <= i < 3 and 0 <= j < 3, f"Índices fuera de rango: ({i}, {j})")
    return _exact_corr(_exact_pmf(tuple), i, j)


def oracle_total_corr_y() -> float:
    """C(Y1, Y2, Y3) poblacional exacta: 3·ln 2 - ln 4 = ln 2 (positiva)."""
    return enumerate_total_correlation(y_distribution_pmf())


def oracle_total_corr_x() -> float:
    """C(X1, X2, X3) poblacional exacta: 0 (variables independientes)."""
    return enumerate_total_correlation(x_distribution_pmf())
