"""Nodo: vectoriza la cohorte para cada tipo de feature pedido."""

from __future__ import annotations

import logging

from app.core.errors import HyperConnectomeError
from app.learn.features import build_feature_matrix
from app.pipeline.nodes.node_errors import record_failure
from app.pipeline.state.pipeline_state import ExperimentState

logger = logging.getLogger(__name__)


def build_features_node(state: ExperimentState) -> ExperimentState:
    """Contract:
    - Input: `dataset`, `feature_kinds`, `estimator_config`, `workers`.
    - Output: `feature_matrices[kind]` con forma (sujetos, features).
    """
    subjects = [s.timeseries for s in state["dataset"].subjects]
    matrices = {}
    try:
        for kind in state["feature_kinds"]:
            matrices[kind] = build_feature_matrix(
                subjects, kind, state["estimator_config"], n_jobs=state.get("workers", 1)
            )
    except HyperConnectomeError as exc:
        return record_failure(state, "build_features", exc)

    state["feature_matrices"] = matrices
    return state
