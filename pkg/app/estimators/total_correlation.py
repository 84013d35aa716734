"""Correlación total por bolas-ε sobre todas las tuplas ordenadas de variables.

Cada entrada del tensor T(i_1 <= ... <= i_d) se estima con probabilidades
localizadas: p_k(ω) = #{j : |X(i_k, j) - ω| < ε} / N para las marginales y la
misma cuenta con todas las condiciones a la vez para la conjunta.

Reglas:
- Las bolas se calculan una sola vez por sujeto (m x N x N) y se reutilizan.
- El barrido se agrupa por prefijos (i_1, ..., i_{d-1}); el último índice
  recorre [i_{d-1}, m) y ocupa un bloque contiguo de rangos.
- Cada entrada se acumula siempre en el mismo orden, sin importar cuántos
  workers participen: el resultado es idéntico bit a bit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import List, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from app.core.errors import ContractViolationError
from app.core.tuple_ranking import tensor_size
from app.models.core_models import SymmetricTensor, TimeSeriesMatrix
from app.models.estimator_models import EpsilonThreshold, EstimatorVariant

logger = logging.getLogger(__name__)

LN2 = float(np.log(2.0))

# Tope de elementos por bloque intermedio (cuentas conjuntas), para acotar memoria.
_MAX_BLOCK_ELEMENTS = 1 << 22
_BALL_ROW_BLOCK = 512
MAX_ORDER = 4


def to_bits(value: float | np.ndarray) -> float | np.ndarray:
    """Convierte nats a bits (divide por ln 2)."""
    return value / LN2


def _measurements(ts: TimeSeriesMatrix | np.ndarray) -> np.ndarray:
    if isinstance(ts, TimeSeriesMatrix):
        return ts.values
    values = np.asarray(ts, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
        raise ContractViolationError(f"Se esperaba una matriz m x n no vacía, forma {values.shape}")
    if not np.all(np.isfinite(values)):
        raise ContractViolationError("Las mediciones contienen valores no finitos")
    return values


def _epsilon_value(eps: EpsilonThreshold | float) -> float:
    value = eps.epsilon if isinstance(eps, EpsilonThreshold) else float(eps)
    if not np.isfinite(value) or value <= 0:
        raise ContractViolationError(f"ε debe ser > 0 (recibido {value!r})")
    return value


def ball_indicator(values: np.ndarray, eps: float) -> np.ndarray:
    """Indicadora booleana (i, s, j) -> |X(i, j) - X(i, s)| < ε, con desigualdad estricta."""
    m, n = values.shape
    ball = np.empty((m, n, n), dtype=bool)
    for i in range(m):
        row = values[i]
        for lo in range(0, n, _BALL_ROW_BLOCK):
            hi = min(n, lo + _BALL_ROW_BLOCK)
            ball[i, lo:hi, :] = np.abs(row[None, :] - row[lo:hi, None]) < eps
    return ball


def marginal_ball_counts(ball: np.ndarray) -> np.ndarray:
    """Cuentas marginales m x N; siempre >= 1 porque cada muestra está en su propia bola."""
    return ball.sum(axis=2, dtype=np.intp)


def _first_occurrence_weights(values: np.ndarray) -> np.ndarray:
    # 1 en la primera muestra de cada valor distinto de la fila, 0 en el resto
    weights = np.zeros(values.shape, dtype=np.float64)
    for i, row in enumerate(values):
        _, first = np.unique(row, return_index=True)
        weights[i, first] = 1.0
    return weights


@dataclass(frozen=True)
class _BallContext:
    """Datos precalculados de un sujeto, compartidos por todos los prefijos."""

    variant: EstimatorVariant
    ball: np.ndarray
    log_count: np.ndarray
    log_marginal: np.ndarray
    cell_weight: np.ndarray
    ball_float: np.ndarray | None

    @property
    def m(self) -> int:
        return int(self.ball.shape[0])

    @property
    def n(self) -> int:
        return int(self.ball.shape[1])

    def sweep(self, prefix: Tuple[int, ...], lo: int, hi: int) -> np.ndarray:
        """Entradas T(prefix + (k,)) para k en [lo, hi)."""
        if self.variant is EstimatorVariant.ALIGNED_RESUBSTITUTION:
            return self._sweep_aligned(prefix, lo, hi)
        return self._sweep_tuple_sum(prefix, lo, hi)

    def _sweep_tuple_sum(self, prefix: Tuple[int, ...], lo: int, hi: int) -> np.ndarray:
        n = self.n
        ball = self.ball_float
        joint = ball[prefix[0]]
        log_prefix = self.log_marginal[prefix[0]]
        weight_prefix = self.cell_weight[prefix[0]]
        for i in prefix[1:]:
            joint = (joint[:, None, :] * ball[i][None, :, :]).reshape(-1, n)
            log_prefix = (log_prefix[:, None] + self.log_marginal[i][None, :]).reshape(-1)
            weight_prefix = (weight_prefix[:, None] * self.cell_weight[i][None, :]).reshape(-1)

        rows = joint.shape[0]
        step = max(1, _MAX_BLOCK_ELEMENTS // (rows * n))
        out = np.empty(hi - lo)
        for start in range(lo, hi, step):
            stop = min(hi, start + step)
            # counts[k, a, s] = Σ_j joint[a, j] · ball[k, s, j]; enteros exactos en float64
            counts = np.rint(np.matmul(joint, ball[start:stop].transpose(0, 2, 1))).astype(np.intp)
            terms = (counts / n) * (
                self.log_count[counts]
                - log_prefix[None, :, None]
                - self.log_marginal[start:stop][:, None, :]
            )
            terms *= weight_prefix[None, :, None] * self.cell_weight[start:stop][:, None, :]
            out[start - lo : stop - lo] = terms.reshape(stop - start, -1).sum(axis=1)
        return out

    def _sweep_aligned(self, prefix: Tuple[int, ...], lo: int, hi: int) -> np.ndarray:
        n = self.n
        joint = self.ball[prefix[0]].copy()
        log_prefix = self.log_marginal[prefix[0]].copy()
        for i in prefix[1:]:
            joint &= self.ball[i]
            log_prefix = log_prefix + self.log_marginal[i]

        step = max(1, _MAX_BLOCK_ELEMENTS // (n * n))
        out = np.empty(hi - lo)
        for start in range(lo, hi, step):
            stop = min(hi, start + step)
            counts = np.logical_and(self.ball[start:stop], joint[None, :, :]).sum(axis=2, dtype=np.intp)
            terms = self.log_count[counts] - log_prefix[None, :] - self.log_marginal[start:stop]
            out[start - lo : stop - lo] = terms.sum(axis=1) / n
        return out


def _build_context(values: np.ndarray, eps: float, variant: EstimatorVariant) -> _BallContext:
    n = values.shape[1]
    ball = ball_indicator(values, eps)
    counts = marginal_ball_counts(ball)

    # log(c / N) para c en 0..N; c = 0 solo aparece multiplicado por p = 0
    log_count = np.zeros(n + 1)
    log_count[1:] = np.log(np.arange(1, n + 1) / n)

    if variant is EstimatorVariant.DISTINCT_CELL_PLUGIN:
        cell_weight = _first_occurrence_weights(values)
    else:
        cell_weight = np.ones(values.shape, dtype=np.float64)

    ball_float = None
    if variant is not EstimatorVariant.ALIGNED_RESUBSTITUTION:
        ball_float = ball.astype(np.float64)

    return _BallContext(
        variant=variant,
        ball=ball,
        log_count=log_count,
        log_marginal=log_count[counts],
        cell_weight=cell_weight,
        ball_float=ball_float,
    )


def _sweep_chunk(context: _BallContext, prefixes: Sequence[Tuple[int, ...]]) -> List[np.ndarray]:
    return [context.sweep(prefix, prefix[-1], context.m) for prefix in prefixes]


def _validate(values: np.ndarray, d: int) -> None:
    if d < 2 or d > MAX_ORDER:
        raise ContractViolationError(f"El orden d debe estar en [2, {MAX_ORDER}] (recibido {d})")
    if values.shape[1] < 1:
        raise ContractViolationError("Se requiere n >= 1 muestras")


def alg1_total_correlation(
    ts: TimeSeriesMatrix | np.ndarray,
    d: int,
    eps: EpsilonThreshold | float,
    variant: EstimatorVariant = EstimatorVariant.PAPER_TUPLE_SUM,
    *,
    n_jobs: int = 1,
) -> SymmetricTensor:
    """Calcula el tensor de correlación total sobre todas las tuplas ordenadas.

    Args:
        ts: Mediciones m x N del sujeto.
        d: Orden de las hiperaristas (2 a 4).
        eps: Radio de la bola-ε.
        variant: Variante de normalización del estimador.
        n_jobs: Workers (hilos) para repartir los prefijos.

    Returns:
        SymmetricTensor: Pesos en orden de rango de tupla.

    Raises:
        ContractViolationError: Si d < 2, ε <= 0 o hay valores no finitos.
    """
    values = _measurements(ts)
    epsilon = _epsilon_value(eps)
    variant = EstimatorVariant(variant)
    _validate(values, d)

    m = values.shape[0]
    context = _build_context(values, epsilon, variant)
    prefixes = list(combinations_with_replacement(range(m), d - 1))

    if n_jobs <= 1 or len(prefixes) < 2:
        blocks = _sweep_chunk(context, prefixes)
    else:
        chunk_count = min(len(prefixes), n_jobs * 4)
        bounds = np.linspace(0, len(prefixes), chunk_count + 1).astype(int)
        chunks = [prefixes[a:b] for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        results = Parallel(n_jobs=n_jobs, prefer="threads")(
            delayed(_sweep_chunk)(context, chunk) for chunk in chunks
        )
        blocks = [block for chunk_blocks in results for block in chunk_blocks]

    weights = np.concatenate(blocks) if blocks else np.zeros(0)
    if weights.shape[0] != tensor_size(m, d):
        raise ContractViolationError("El barrido no cubrió todas las tuplas")

    logger.debug(
        f"Tensor de correlación total: m={m}, d={d}, N={values.shape[1]}, "
        f"variante={variant.value}, {weights.shape[0]} entradas"
    )
    return SymmetricTensor(m=m, d=d, weights=weights)


def total_correlation_entry(
    ts: TimeSeriesMatrix | np.ndarray,
    index_tuple: Sequence[int],
    eps: EpsilonThreshold | float,
    variant: EstimatorVariant = EstimatorVariant.PAPER_TUPLE_SUM,
) -> float:
    """Una sola entrada del tensor, calculada sobre las filas involucradas.

    Coincide bit a bit con la entrada correspondiente de `alg1_total_correlation`.
    """
    values = _measurements(ts)
    ordered = sorted(int(i) for i in index_tuple)
    _validate(values, len(ordered))
    if ordered[0] < 0 or ordered[-1] >= values.shape[0]:
        raise ContractViolationError(f"Índices fuera de rango: {tuple(ordered)}")

    sub = values[ordered]
    context = _build_context(sub, _epsilon_value(eps), EstimatorVariant(variant))
    d = len(ordered)
    prefix = tuple(range(d - 1))
    return float(context.sweep(prefix, d - 1, d)[0])
