"""Registro uniforme de fallas de nodo en el estado."""

from __future__ import annotations

import logging

from app.core.errors import HyperConnectomeError
from app.pipeline.state.pipeline_state import ExperimentState

logger = logging.getLogger(__name__)


def record_failure(state: ExperimentState, stage: str, exc: Exception) -> ExperimentState:
    """Escribe `error_message` y `error_code` y devuelve el mismo estado.

    Errores del dominio conservan su código de salida; los de I/O salen con 2.
    """
    if isinstance(exc, HyperConnectomeError):
        code = exc.exit_code
    elif isinstance(exc, OSError):
        code = 2
    else:
        code = 1
    logger.error(f"Error en {stage}: {exc}", exc_info=True)
    state["error_message"] = f"{stage}: {exc}"
    state["error_code"] = code
    return state
