"""Nodo: arma el `ExperimentReport` final."""

from __future__ import annotations

from pydantic import ValidationError

from app.core.errors import ContractViolationError
from app.learn.experiment import summarize
from app.models.learn_models import ExperimentReport
from app.pipeline.nodes.node_errors import record_failure
from app.pipeline.state.pipeline_state import ExperimentState


def assemble_report_node(state: ExperimentState) -> ExperimentState:
    reports = state["trial_reports"]
    try:
        state["report"] = ExperimentReport(
            positive_label=state["resolved_positive_label"],
            trials=reports,
            means={kind: summarize(items) for kind, items in reports.items()},
            t_statistic=state.get("t_statistic"),
            p_value=state.get("p_value"),
            welch=state.get("welch", False),
            config=state.get("config_echo", {}),
        )
    except ValidationError as exc:
        return record_failure(state, "assemble_report", ContractViolationError(str(exc)))
    return state
