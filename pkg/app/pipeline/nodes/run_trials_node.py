"""Nodo: corre los trials apareados de cada tipo de feature."""

from __future__ import annotations

import logging

from app.core.errors import HyperConnectomeError
from app.learn.experiment import run_trials, summarize
from app.pipeline.nodes.node_errors import record_failure
from app.pipeline.state.pipeline_state import ExperimentState

logger = logging.getLogger(__name__)


def run_trials_node(state: ExperimentState) -> ExperimentState:
    """Contract:
    - Input: `feature_matrices`, `labels`, `trials`, `fraction`, `seed`, `svm_config`.
    - Output: `trial_reports[kind]` en orden de trial. Las particiones solo
      dependen de (seed, trial), así que los trials quedan apareados entre tipos.
    """
    reports = {}
    try:
        for kind, matrix in state["feature_matrices"].items():
            reports[kind] = run_trials(
                matrix,
                state["labels"],
                state["trials"],
                state["fraction"],
                state["seed"],
                state["svm_config"],
                n_jobs=state.get("workers", 1),
            )
            mean = summarize(reports[kind])
            logger.info(
                f"📊 {kind}: train {mean.train_accuracy:.3f} / test {mean.test_accuracy:.3f} "
                f"/ F1 {mean.f1:.3f} ({state['trials']} trials)"
            )
    except HyperConnectomeError as exc:
        return record_failure(state, "run_trials", exc)

    state["trial_reports"] = reports
    return state
