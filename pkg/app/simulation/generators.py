"""Generadores de cohortes sintéticas.

- Paridad: X_i ~ Rademacher (±1 equiprobables), Y = [X1·X2, X2·X3, X3·X1].
  Las coordenadas de Y son independientes de a pares pero no en conjunto.
- Cohorte clínica de reemplazo: series gaussianas cuantizadas a niveles
  enteros; en los casos, algunas ternas de ROIs llevan un acople de paridad.

Claves de stream: (seed, 0, k) para el sujeto k y (seed, 1) para la
estructura de la cohorte clínica.
"""

from __future__ import annotations

import logging
from typing import List, Literal, Tuple

import numpy as np

from app.core.errors import require
from app.models.core_models import TimeSeriesMatrix
from app.models.simulation_models import LabeledSubject, SimDataset
from app.utils.parallel import run_ordered
from app.utils.random_streams import derive_stream

logger = logging.getLogger(__name__)

SUBJECT_STREAM = 0
STRUCTURE_STREAM = 1

CASE_LABEL = "schiz"
CONTROL_LABEL = "normal"


def _rademacher(stream: np.random.Generator, shape: Tuple[int, int]) -> np.ndarray:
    return (stream.integers(0, 2, size=shape) * 2 - 1).astype(np.float64)


def gen_x_subject(stream: np.random.Generator, n: int) -> TimeSeriesMatrix:
    """Sujeto de la distribución X: matriz 3 x n de ±1 independientes."""
    require(n >= 1, f"Se requiere n >= 1 (recibido {n})")
    return TimeSeriesMatrix(values=_rademacher(stream, (3, n)))


def gen_y_subject(stream: np.random.Generator, n: int) -> TimeSeriesMatrix:
    """Sujeto de la distribución Y: por columna emite [X1·X2, X2·X3, X3·X1].

    El producto de las tres filas vale +1 en cada columna.
    """
    require(n >= 1, f"Se requiere n >= 1 (recibido {n})")
    hidden = _rademacher(stream, (3, n))
    values = np.stack([hidden[0] * hidden[1], hidden[1] * hidden[2], hidden[2] * hidden[0]])
    return TimeSeriesMatrix(values=values)


def _parity_subject(job: Tuple[int, int, int, str]) -> LabeledSubject:
    seed, index, n, label = job
    stream = derive_stream(seed, SUBJECT_STREAM, index)
    ts = gen_y_subject(stream, n) if label == "Y" else gen_x_subject(stream, n)
    return LabeledSubject(
        subject_id=f"subject_{index:04d}",
        label=label,
        timeseries=ts,
        stream_key=[seed, SUBJECT_STREAM, index],
    )


def gen_dataset(nx: int, ny: int, n: int, seed: int, *, n_jobs: int = 1) -> SimDataset:
    """Genera `nx` sujetos X seguidos de `ny` sujetos Y con `n` muestras cada uno.

    Cada sujeto usa su propio stream derivado de (seed, índice), de modo que el
    dataset no depende del paralelismo de generación.
    """
    require(nx >= 0 and ny >= 0, f"Cantidades de sujetos inválidas: nx={nx}, ny={ny}")
    require(n >= 1, f"Se requiere n >= 1 (recibido {n})")

    jobs = [(seed, k, n, "X" if k < nx else "Y") for k in range(nx + ny)]
    subjects = run_ordered(_parity_subject, jobs, n_jobs=n_jobs)

    logger.info(f"🧪 Dataset de paridad generado: {nx} X + {ny} Y, {n} muestras, seed={seed}")
    return SimDataset(
        subjects=subjects,
        samples_per_subject=n,
        seed=seed,
        positive_label="Y",
        negative_label="X",
    )


def coupled_triples(m: int, seed: int, count: int) -> np.ndarray:
    """Ternas disjuntas de ROIs (elegidas con el stream de estructura) que llevan el acople."""
    require(m >= 3, f"Se requieren al menos 3 ROIs para acoplar ternas (m={m})")
    count = min(count, m // 3)
    stream = derive_stream(seed, STRUCTURE_STREAM)
    return stream.permutation(m)[: 3 * count].reshape(count, 3)


def _cohort_subject(job: Tuple[int, int, int, int, str, int, np.ndarray]) -> LabeledSubject:
    seed, index, m, n, label, levels, triples = job
    stream = derive_stream(seed, SUBJECT_STREAM, index)
    latent = stream.standard_normal((m, n))
    if label == CASE_LABEL:
        for a, b, c in triples:
            latent[c] = np.abs(latent[c]) * np.sign(latent[a] * latent[b])
    values = np.clip(np.round(latent * 2.0), -levels, levels)
    return LabeledSubject(
        subject_id=f"subject_{index:04d}",
        label=label,
        timeseries=TimeSeriesMatrix(values=values),
        stream_key=[seed, SUBJECT_STREAM, index],
    )


def gen_cohort_standin(
    n_case: int = 104,
    n_control: int = 124,
    m: int = 61,
    n: int = 20,
    seed: int = 0,
    *,
    levels: int = 4,
    triple_count: int = 5,
    n_jobs: int = 1,
) -> SimDataset:
    """Cohorte sintética con el tamaño y las proporciones de la cohorte clínica.

    Los controles son gaussianos independientes cuantizados a enteros en
    [-levels, levels]; en los casos, cada terna (a, b, c) reemplaza la fila c
    por |c|·sign(a·b), sin correlación de a pares.
    """
    require(n_case >= 0 and n_control >= 0, "Cantidades de sujetos inválidas")
    require(n >= 1, f"Se requiere n >= 1 (recibido {n})")
    require(levels >= 1, f"levels debe ser >= 1 (recibido {levels})")

    triples = coupled_triples(m, seed, triple_count)
    labels: List[Literal["normal", "schiz"]] = [CONTROL_LABEL] * n_control + [CASE_LABEL] * n_case
    jobs = [(seed, k, m, n, label, levels, triples) for k, label in enumerate(labels)]
    subjects = run_ordered(_cohort_subject, jobs, n_jobs=n_jobs)

    logger.info(
        f"🧪 Cohorte de reemplazo generada: {n_control} {CONTROL_LABEL} + {n_case} {CASE_LABEL}, "
        f"{m} ROIs, {n} muestras, seed={seed}"
    )
    return SimDataset(
        subjects=subjects,
        samples_per_subject=n,
        seed=seed,
        positive_label=CASE_LABEL,
        negative_label=CONTROL_LABEL,
    )
