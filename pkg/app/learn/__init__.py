"""Vectorización, clasificador lineal, métricas y test t."""

from app.learn.experiment import run_experiment, run_trials, summarize
from app.learn.features import build_feature_matrix, vectorize_graph, vectorize_hypergraph
from app.learn.metrics import metrics, split
from app.learn.svm import hinge_objective, svm_predict, svm_train
from app.learn.ttest import two_sample_ttest

__all__ = [
    "build_feature_matrix",
    "hinge_objective",
    "metrics",
    "run_experiment",
    "run_trials",
    "split",
    "summarize",
    "svm_predict",
    "svm_train",
    "two_sample_ttest",
    "vectorize_graph",
    "vectorize_hypergraph",
]
