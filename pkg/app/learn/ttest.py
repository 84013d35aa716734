"""Test t de dos muestras (varianza combinada, o Welch con bandera)."""

from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np
from scipy.special import betainc

from app.core.errors import require


def _two_sided_p(t: float, df: float) -> float:
    """P(|T| >= |t|) con T ~ t(df), vía la beta incompleta regularizada."""
    p = float(betainc(df / 2.0, 0.5, df / (df + t * t)))
    return min(max(p, 0.0), 1.0)


def two_sample_ttest(
    a: Sequence[float] | np.ndarray,
    b: Sequence[float] | np.ndarray,
    *,
    welch: bool = False,
) -> Tuple[float, float]:
    """Estadístico t y p bilateral para medias de `a` y `b`.

    Con error estándar cero: medias iguales dan (0, 1) y medias distintas
    (±inf, 0).

    Raises:
        ContractViolationError: Si alguna muestra tiene menos de 2 valores o no finitos.
    """
    xa = np.asarray(a, dtype=np.float64)
    xb = np.asarray(b, dtype=np.float64)
    require(xa.ndim == 1 and xb.ndim == 1, "Las muestras deben ser vectores")
    require(xa.shape[0] >= 2 and xb.shape[0] >= 2, "Cada muestra requiere al menos 2 valores")
    require(bool(np.all(np.isfinite(xa)) and np.all(np.isfinite(xb))), "Las muestras tienen valores no finitos")

    na, nb = xa.shape[0], xb.shape[0]
    mean_a, mean_b = float(xa.mean()), float(xb.mean())
    var_a, var_b = float(xa.var(ddof=1)), float(xb.var(ddof=1))

    if welch:
        se_a, se_b = var_a / na, var_b / nb
        se2 = se_a + se_b
        df = se2 * se2 / (se_a * se_a / (na - 1) + se_b * se_b / (nb - 1)) if se2 > 0 else float(na + nb - 2)
    else:
        df = float(na + nb - 2)
        pooled = ((na - 1) * var_a + (nb - 1) * var_b) / df
        se2 = pooled * (1.0 / na + 1.0 / nb)

    diff = mean_a - mean_b
    if se2 == 0.0:
        if diff == 0.0:
            return 0.0, 1.0
        return math.copysign(math.inf, diff), 0.0

    t = diff / math.sqrt(se2)
    return t, _two_sided_p(t, df)
