"""Errores del dominio y ranking de tuplas del tensor simétrico."""

from app.core.errors import (
    ContractViolationError,
    DegenerateLabelsError,
    DegenerateVarianceError,
    HyperConnectomeError,
    InsufficientSamplesError,
    InsufficientVariablesError,
    ParseError,
    PipelineError,
    require,
)
from app.core.tuple_ranking import all_tuples, strict_tuple_mask, tensor_size, tuple_rank, tuple_unrank

__all__ = [
    "ContractViolationError",
    "DegenerateLabelsError",
    "DegenerateVarianceError",
    "HyperConnectomeError",
    "InsufficientSamplesError",
    "InsufficientVariablesError",
    "ParseError",
    "PipelineError",
    "all_tuples",
    "require",
    "strict_tuple_mask",
    "tensor_size",
    "tuple_rank",
    "tuple_unrank",
]
