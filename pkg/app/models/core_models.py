"""Modelos Pydantic para los tipos de datos base (series, conectomas, tensores)."""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.tuple_ranking import tensor_size, tuple_rank


def _frozen_array(values: object, *, ndim: int, name: str) -> np.ndarray:
    """Copia `values` a un ndarray float64 de solo lectura con `ndim` dimensiones."""
    array = np.array(values, dtype=np.float64, copy=True)
    if array.ndim != ndim:
        raise ValueError(f"{name} debe tener {ndim} dimensiones, tiene {array.ndim}")
    if not np.all(np.isfinite(array)):
        raise ValueError(f"{name} contiene valores no finitos (NaN/Inf)")
    array.setflags(write=False)
    return array


class TimeSeriesMatrix(BaseModel):
    """Matriz M x N de mediciones de un sujeto: fila i = variable (ROI), columna j = muestra."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray = Field(..., description="Mediciones reales m x n, todas finitas")
    labels: Optional[List[str]] = Field(None, description="Nombres opcionales de las m variables")

    @field_validator("values", mode="before")
    @classmethod
    def _validate_values(cls, value: object) -> np.ndarray:
        array = _frozen_array(value, ndim=2, name="values")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(f"Se requiere m >= 1 y n >= 1, forma recibida {array.shape}")
        return array

    @model_validator(mode="after")
    def _validate_labels(self) -> "TimeSeriesMatrix":
        if self.labels is not None and len(self.labels) != self.values.shape[0]:
            raise ValueError(
                f"labels tiene {len(self.labels)} nombres para {self.values.shape[0]} variables"
            )
        return self

    @property
    def m(self) -> int:
        return int(self.values.shape[0])

    @property
    def n(self) -> int:
        return int(self.values.shape[1])

    def roi_labels(self) -> List[str]:
        """Nombres de las variables; por defecto los números de ROI 1-based."""
        if self.labels is not None:
            return list(self.labels)
        return [str(i + 1) for i in range(self.m)]


class ConnectomeMatrix(BaseModel):
    """Matriz de correlación de Pearson M x M: simétrica, diagonal unitaria, valores en [-1, 1]."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: np.ndarray = Field(..., description="Matriz simétrica m x m")

    @field_validator("entries", mode="before")
    @classmethod
    def _validate_entries(cls, value: object) -> np.ndarray:
        array = _frozen_array(value, ndim=2, name="entries")
        if array.shape[0] != array.shape[1]:
            raise ValueError(f"La matriz debe ser cuadrada, forma {array.shape}")
        if not np.array_equal(array, array.T):
            raise ValueError("La matriz de conectoma no es simétrica")
        if not np.all(np.diag(array) == 1.0):
            raise ValueError("La diagonal del conectoma debe ser 1")
        if np.any(np.abs(array) > 1.0):
            raise ValueError("Las correlaciones deben estar en [-1, 1]")
        return array

    @property
    def m(self) -> int:
        return int(self.entries.shape[0])


class SymmetricTensor(BaseModel):
    """Tensor simétrico almacenado solo sobre tuplas ordenadas.

    `weights[r]` es el peso de la tupla no decreciente de rango `r`;
    cualquier permutación de la tupla devuelve el mismo valor.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: int = Field(..., ge=0, description="Cantidad de variables")
    d: int = Field(..., ge=1, description="Orden (vértices por hiperarista)")
    weights: np.ndarray = Field(..., description="Pesos indexados por rango de tupla")

    @field_validator("weights", mode="before")
    @classmethod
    def _validate_weights(cls, value: object) -> np.ndarray:
        return _frozen_array(value, ndim=1, name="weights")

    @model_validator(mode="after")
    def _validate_length(self) -> "SymmetricTensor":
        expected = tensor_size(self.m, self.d)
        if self.weights.shape[0] != expected:
            raise ValueError(
                f"Se esperaban C(m+d-1, d) = {expected} pesos, se recibieron {self.weights.shape[0]}"
            )
        return self

    def get(self, index_tuple: Sequence[int]) -> float:
        """Peso de una tupla en cualquier orden (se canoniza ordenándola)."""
        canonical = sorted(int(i) for i in index_tuple)
        return float(self.weights[tuple_rank(canonical, self.m, self.d)])
