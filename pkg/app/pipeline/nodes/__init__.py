"""Nodos del pipeline de clasificación."""

from app.pipeline.nodes.assemble_report_node import assemble_report_node
from app.pipeline.nodes.build_features_node import build_features_node
from app.pipeline.nodes.load_dataset_node import load_dataset_node
from app.pipeline.nodes.run_trials_node import run_trials_node
from app.pipeline.nodes.significance_node import significance_node

__all__ = [
    "assemble_report_node",
    "build_features_node",
    "load_dataset_node",
    "run_trials_node",
    "significance_node",
]
