"""Estimadores de correlación e información."""

from app.estimators.correlation import connectome, pearson
from app.estimators.entropy import (
    entropy_exact,
    enumerate_total_correlation,
    gaussian_tc_closed_form,
    joint_entropy_exact,
    total_correlation_exact,
    total_correlation_kl_exact,
)
from app.estimators.total_correlation import (
    LN2,
    alg1_total_correlation,
    ball_indicator,
    marginal_ball_counts,
    to_bits,
    total_correlation_entry,
)

__all__ = [
    "LN2",
    "alg1_total_correlation",
    "ball_indicator",
    "connectome",
    "entropy_exact",
    "enumerate_total_correlation",
    "gaussian_tc_closed_form",
    "joint_entropy_exact",
    "marginal_ball_counts",
    "pearson",
    "to_bits",
    "total_correlation_entry",
    "total_correlation_exact",
    "total_correlation_kl_exact",
]
