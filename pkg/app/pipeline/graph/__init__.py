from app.pipeline.graph.experiment_graph import build_experiment_graph, experiment_graph, run_classification

__all__ = ["build_experiment_graph", "experiment_graph", "run_classification"]
