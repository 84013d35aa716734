"""Nodo: carga la cohorte desde su directorio y resuelve las etiquetas ±1."""

from __future__ import annotations

import logging

import numpy as np

from app.clients.dataset_store_client import dataset_store_client
from app.core.errors import ContractViolationError, HyperConnectomeError
from app.pipeline.nodes.node_errors import record_failure
from app.pipeline.state.pipeline_state import ExperimentState

logger = logging.getLogger(__name__)

MIN_SUBJECTS_PER_CLASS = 2


def load_dataset_node(state: ExperimentState) -> ExperimentState:
    """Lee manifiesto y CSVs.

    Contract:
    - Input: `dataset_dir`, opcionales `roi_range`, `samples_cap`, `transpose`,
      `positive_label`.
    - Output: `dataset`, `labels` (+1 = clase positiva), `resolved_positive_label`,
      o `error_message`/`error_code`.
    """
    try:
        dataset = dataset_store_client.read(
            state["dataset_dir"],
            roi_range=state.get("roi_range"),
            samples_cap=state.get("samples_cap"),
            transpose=state.get("transpose", False),
        )
        positive = state.get("positive_label") or dataset.positive_label
        if positive not in (dataset.positive_label, dataset.negative_label):
            raise ContractViolationError(
                f"La etiqueta positiva {positive!r} no pertenece a la cohorte "
                f"({dataset.positive_label!r}, {dataset.negative_label!r})"
            )
        labels = np.array([1 if s.label == positive else -1 for s in dataset.subjects], dtype=np.int64)
        for sign in (1, -1):
            count = int(np.sum(labels == sign))
            if count < MIN_SUBJECTS_PER_CLASS:
                raise ContractViolationError(
                    f"Se requieren al menos {MIN_SUBJECTS_PER_CLASS} sujetos por clase, "
                    f"la clase {sign:+d} tiene {count}"
                )
    except (HyperConnectomeError, OSError) as exc:
        return record_failure(state, "load_dataset", exc)

    logger.info(f"📂 Cohorte lista: {len(dataset.subjects)} sujetos, clase positiva {positive!r}")
    state["dataset"] = dataset
    state["labels"] = labels
    state["resolved_positive_label"] = positive
    return state
