"""Orquestación de trials: partición, entrenamiento y evaluación.

Claves de stream por trial t: (seed, 2, t) para la partición y (seed, 3, t)
para el orden de ejemplos del SVM. La partición no depende del tipo de
feature, así los trials de grafo e hipergrafo quedan apareados.
"""

from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

import numpy as np

from app.core.errors import require
from app.learn.features import build_feature_matrix
from app.learn.metrics import metrics, split
from app.learn.svm import SVM_STREAM, svm_predict, svm_train
from app.models.estimator_models import EstimatorConfig
from app.models.learn_models import FeatureKind, MeanMetrics, SvmConfig, TrialReport
from app.models.simulation_models import SimDataset
from app.utils.parallel import run_ordered
from app.utils.random_streams import derive_stream

logger = logging.getLogger(__name__)

SPLIT_STREAM = 2


def _run_trial(job: Tuple[np.ndarray, np.ndarray, int, float, int, SvmConfig]) -> TrialReport:
    features, labels, trial, fraction, seed, svm_config = job
    train_idx, test_idx = split(labels.shape[0], fraction, derive_stream(seed, SPLIT_STREAM, trial))
    model = svm_train(
        features[train_idx],
        labels[train_idx],
        svm_config,
        stream=derive_stream(seed, SVM_STREAM, trial),
    )
    train_accuracy, _ = metrics(svm_predict(model, features[train_idx]), labels[train_idx])
    test_accuracy, f1 = metrics(svm_predict(model, features[test_idx]), labels[test_idx])
    return TrialReport(
        train_accuracy=train_accuracy, test_accuracy=test_accuracy, f1=f1, split_seed=trial
    )


def run_trials(
    features: np.ndarray,
    labels: Sequence[int] | np.ndarray,
    trials: int,
    fraction: float,
    seed: int,
    svm_config: SvmConfig = SvmConfig(),
    *,
    n_jobs: int = 1,
) -> List[TrialReport]:
    """Ejecuta `trials` repeticiones independientes sobre una matriz de features.

    Returns:
        List[TrialReport]: En orden de trial, sin importar el orden de finalización.
    """
    require(trials >= 1, f"Se requiere trials >= 1 (recibido {trials})")
    matrix = np.asarray(features, dtype=np.float64)
    y = np.asarray(labels, dtype=np.int64)
    require(matrix.ndim == 2 and matrix.shape[0] == y.shape[0], "Features y etiquetas no coinciden")

    jobs = [(matrix, y, t, fraction, seed, svm_config) for t in range(trials)]
    reports = run_ordered(_run_trial, jobs, n_jobs=n_jobs)
    for report in reports:
        logger.debug(
            f"Trial {report.split_seed}: train={report.train_accuracy:.3f} "
            f"test={report.test_accuracy:.3f} f1={report.f1:.3f}"
        )
    return reports


def run_experiment(
    dataset: SimDataset,
    feature_kind: FeatureKind,
    trials: int,
    fraction: float,
    seed: int,
    estimator_config: EstimatorConfig = EstimatorConfig(),
    *,
    svm_config: SvmConfig = SvmConfig(),
    n_jobs: int = 1,
) -> List[TrialReport]:
    """Vectoriza la cohorte y corre los trials para un tipo de feature."""
    matrix = build_feature_matrix(
        [s.timeseries for s in dataset.subjects], feature_kind, estimator_config, n_jobs=n_jobs
    )
    reports = run_trials(
        matrix, dataset.labels_pm1(), trials, fraction, seed, svm_config, n_jobs=n_jobs
    )
    mean = summarize(reports)
    logger.info(
        f"📊 {feature_kind}: {trials} trials, test accuracy media {mean.test_accuracy:.3f}, "
        f"F1 media {mean.f1:.3f}"
    )
    return reports


def summarize(reports: Sequence[TrialReport]) -> MeanMetrics:
    """Promedios de train/test accuracy y F1."""
    require(len(reports) >= 1, "No hay trials para promediar")
    return MeanMetrics(
        train_accuracy=float(np.mean([r.train_accuracy for r in reports])),
        test_accuracy=float(np.mean([r.test_accuracy for r in reports])),
        f1=float(np.mean([r.f1 for r in reports])),
    )
