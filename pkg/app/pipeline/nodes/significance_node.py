"""Nodo: test t de la test accuracy, hipergrafo contra grafo."""

from __future__ import annotations

import logging

from app.core.errors import HyperConnectomeError
from app.learn.ttest import two_sample_ttest
from app.pipeline.nodes.node_errors import record_failure
from app.pipeline.state.pipeline_state import ExperimentState

logger = logging.getLogger(__name__)


def significance_node(state: ExperimentState) -> ExperimentState:
    """Contract:
    - Input: `trial_reports`, `welch`.
    - Output: `t_statistic` y `p_value`; quedan en None si no están ambos tipos
      de feature o si hay un solo trial.
    """
    reports = state["trial_reports"]
    state["t_statistic"] = None
    state["p_value"] = None
    if "graph" not in reports or "hypergraph" not in reports:
        return state
    if state["trials"] < 2:
        logger.warning("Con un solo trial no se calcula el test t")
        return state

    try:
        t, p = two_sample_ttest(
            [r.test_accuracy for r in reports["hypergraph"]],
            [r.test_accuracy for r in reports["graph"]],
            welch=state.get("welch", False),
        )
    except HyperConnectomeError as exc:
        return record_failure(state, "significance", exc)

    logger.info(f"📐 Test t (hipergrafo vs grafo): t={t:.4f}, p={p:.6g}")
    state["t_statistic"] = t
    state["p_value"] = p
    return state
