"""Grafo de LangGraph del experimento de clasificación.

Flujo secuencial:
1. START → load_dataset
2. load_dataset → build_features
3. build_features → run_trials
4. run_trials → significance
5. significance → assemble_report → END

Después de cada nodo, si el estado trae `error_message` el grafo termina.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Literal, Optional, Tuple

from langgraph.graph import END, START, StateGraph

from app.core.errors import PipelineError
from app.models.estimator_models import EstimatorConfig
from app.models.learn_models import ExperimentReport, SvmConfig
from app.pipeline.nodes import (
    assemble_report_node,
    build_features_node,
    load_dataset_node,
    run_trials_node,
    significance_node,
)
from app.pipeline.state.pipeline_state import ExperimentState

logger = logging.getLogger(__name__)

_SEQUENCE = ["load_dataset", "build_features", "run_trials", "significance", "assemble_report"]


def continue_or_end(state: ExperimentState) -> Literal["continue", "end"]:
    """Decide si seguir al siguiente nodo o terminar por error."""
    if state.get("error_message"):
        logger.error(f"Error crítico detectado: {state['error_message']}")
        return "end"
    return "continue"


def build_experiment_graph():
    """Construye y compila el grafo del experimento.

    Returns:
        StateGraph compilado y listo para ejecutar.
    """
    graph = StateGraph(ExperimentState)

    graph.add_node("load_dataset", load_dataset_node)
    graph.add_node("build_features", build_features_node)
    graph.add_node("run_trials", run_trials_node)
    graph.add_node("significance", significance_node)
    graph.add_node("assemble_report", assemble_report_node)

    graph.add_edge(START, "load_dataset")
    for current, following in zip(_SEQUENCE, _SEQUENCE[1:]):
        graph.add_conditional_edges(current, continue_or_end, {"continue": following, "end": END})
    graph.add_edge("assemble_report", END)

    compiled_graph = graph.compile()
    logger.debug("Grafo del experimento compilado")
    return compiled_graph


# Instancia singleton del grafo compilado
experiment_graph = build_experiment_graph()


def run_classification(
    dataset_dir: str,
    *,
    feature_kinds: List[str],
    estimator_config: EstimatorConfig,
    svm_config: SvmConfig,
    trials: int,
    fraction: float,
    seed: int,
    welch: bool = False,
    positive_label: Optional[str] = None,
    roi_range: Optional[Tuple[int, int]] = None,
    samples_cap: Optional[int] = None,
    transpose: bool = False,
    workers: int = 1,
    config_echo: Optional[Dict[str, Any]] = None,
) -> ExperimentReport:
    """Ejecuta el experimento completo sobre un directorio de cohorte.

    Raises:
        PipelineError: Si algún nodo registró un error; conserva su código de salida.
    """
    initial_state: ExperimentState = {
        "dataset_dir": dataset_dir,
        "feature_kinds": feature_kinds,
        "estimator_config": estimator_config,
        "svm_config": svm_config,
        "trials": trials,
        "fraction": fraction,
        "seed": seed,
        "welch": welch,
        "positive_label": positive_label,
        "roi_range": roi_range,
        "samples_cap": samples_cap,
        "transpose": transpose,
        "workers": workers,
        "config_echo": config_echo or {},
    }

    logger.info(f"🚀 Iniciando clasificación sobre {dataset_dir} ({', '.join(feature_kinds)})")
    final_state = experiment_graph.invoke(initial_state)

    if final_state.get("error_message"):
        raise PipelineError(final_state["error_message"], exit_code=final_state.get("error_code") or 1)

    logger.info("✅ Clasificación completada")
    return final_state["report"]
