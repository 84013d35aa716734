"""Cohortes sintéticas y oráculos poblacionales."""

from app.simulation.generators import (
    CASE_LABEL,
    CONTROL_LABEL,
    gen_cohort_standin,
    gen_dataset,
    gen_x_subject,
    gen_y_subject,
)
from app.simulation.oracles import (
    oracle_pairwise_corr_x,
    oracle_pairwise_corr_y,
    oracle_total_corr_x,
    oracle_total_corr_y,
    x_distribution_pmf,
    y_distribution_pmf,
)

__all__ = [
    "CASE_LABEL",
    "CONTROL_LABEL",
    "gen_cohort_standin",
    "gen_dataset",
    "gen_x_subject",
    "gen_y_subject",
    "oracle_pairwise_corr_x",
    "oracle_pairwise_corr_y",
    "oracle_total_corr_x",
    "oracle_total_corr_y",
    "x_distribution_pmf",
    "y_distribution_pmf",
]
