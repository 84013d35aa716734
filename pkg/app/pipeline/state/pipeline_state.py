"""Estado del pipeline de clasificación.

Este estado es compartido por todos los nodos del grafo.
Regla importante: los nodos reciben y devuelven el mismo tipo de estado.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple, TypedDict

import numpy as np

from app.models.estimator_models import EstimatorConfig
from app.models.learn_models import ExperimentReport, SvmConfig, TrialReport
from app.models.simulation_models import SimDataset


class ExperimentState(TypedDict, total=False):
    """Estado del experimento de clasificación grafo vs hipergrafo."""

    # Input
    dataset_dir: str
    roi_range: Optional[Tuple[int, int]]
    samples_cap: Optional[int]
    transpose: bool
    positive_label: Optional[str]
    feature_kinds: List[str]  # "graph" | "hypergraph"
    estimator_config: EstimatorConfig
    svm_config: SvmConfig
    trials: int
    fraction: float
    seed: int
    welch: bool
    workers: int
    config_echo: Dict[str, Any]

    # Cohorte
    dataset: Optional[SimDataset]
    labels: Optional[np.ndarray]  # ±1, +1 = clase positiva
    resolved_positive_label: Optional[str]

    # Features y trials
    feature_matrices: Dict[str, np.ndarray]
    trial_reports: Dict[str, List[TrialReport]]

    # Significancia (test accuracy hipergrafo vs grafo)
    t_statistic: Optional[float]
    p_value: Optional[float]

    # Resultado
    report: Optional[ExperimentReport]

    # Errores
    error_message: Optional[str]
    error_code: Optional[int]
