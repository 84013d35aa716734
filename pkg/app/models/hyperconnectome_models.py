"""Modelos Pydantic del hiper-conectoma y de su documento serializado."""

from __future__ import annotations

import math
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.core_models import SymmetricTensor
from app.models.estimator_models import EstimatorVariant, LogBase


class HyperConnectome(BaseModel):
    """Hipergrafo de un sujeto: tensor de correlación total más metadatos."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tensor: SymmetricTensor
    epsilon: float = Field(..., gt=0, allow_inf_nan=False)
    d: int = Field(..., ge=2)
    variant: EstimatorVariant
    roi_labels: List[str]
    source_id: Optional[str] = None
    log_base: LogBase = "nat"

    @model_validator(mode="after")
    def _validate_shape(self) -> "HyperConnectome":
        if self.tensor.m != len(self.roi_labels):
            raise ValueError(
                f"El tensor tiene m={self.tensor.m} pero hay {len(self.roi_labels)} etiquetas"
            )
        if self.tensor.d != self.d:
            raise ValueError(f"El tensor tiene d={self.tensor.d} pero el hiper-conectoma d={self.d}")
        return self

    @property
    def m(self) -> int:
        return self.tensor.m


class HyperedgeList(BaseModel):
    """Hiperaristas significativas: (tupla ordenada, peso) con peso > umbral."""

    model_config = ConfigDict(frozen=True)

    edges: List[Tuple[Tuple[int, ...], float]] = Field(default_factory=list)
    threshold: float

    @model_validator(mode="after")
    def _validate_edges(self) -> "HyperedgeList":
        seen = set()
        for index_tuple, weight in self.edges:
            if not weight > self.threshold:
                raise ValueError(f"La hiperarista {index_tuple} no supera el umbral {self.threshold}")
            if list(index_tuple) != sorted(index_tuple):
                raise ValueError(f"La tupla {index_tuple} no está ordenada")
            if index_tuple in seen:
                raise ValueError(f"Tupla duplicada {index_tuple}")
            seen.add(index_tuple)
        return self

    def __len__(self) -> int:
        return len(self.edges)


class HyperConnectomeEntry(BaseModel):
    """Entrada del documento: tupla 1-based ordenada y su peso."""

    idx: List[int]
    w: float

    @model_validator(mode="after")
    def _validate_weight(self) -> "HyperConnectomeEntry":
        if not math.isfinite(self.w):
            raise ValueError("El peso debe ser finito")
        return self


class HyperConnectomeDocument(BaseModel):
    """Documento JSON de un hiper-conectoma (formato de intercambio)."""

    m: int = Field(..., ge=0)
    d: int = Field(..., ge=2)
    epsilon: float = Field(..., gt=0, allow_inf_nan=False)
    variant: EstimatorVariant
    log_base: LogBase = "nat"
    roi_labels: List[str]
    source_id: Optional[str] = None
    config: Optional[Dict[str, Any]] = Field(
        None, description="Configuración resuelta del comando que generó el documento"
    )
    entries: List[HyperConnectomeEntry]

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "m": 2,
                    "d": 2,
                    "epsilon": 1e-5,
                    "variant": "paper",
                    "log_base": "nat",
                    "roi_labels": ["1", "2"],
                    "source_id": "subject_0000",
                    "config": None,
                    "entries": [
                        {"idx": [1, 1], "w": 0.6931471805599453},
                        {"idx": [1, 2], "w": 0.6931471805599453},
                        {"idx": [2, 2], "w": 0.6931471805599453},
                    ],
                }
            ]
        }
    }
