"""Modelos Pydantic del clasificador: features, modelo lineal y reportes."""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.errors import ContractViolationError
from app.core.tuple_ranking import strict_tuple_mask, tensor_size

FeatureKind = Literal["graph", "hypergraph"]


class FeatureSchema(BaseModel):
    """Forma de un vector de features: triángulo superior (m) o tensor (m, d)."""

    model_config = ConfigDict(frozen=True)

    kind: FeatureKind
    m: int = Field(..., ge=1)
    d: Optional[int] = Field(None, ge=1)
    include_degenerate: bool = True

    @model_validator(mode="after")
    def _validate_order(self) -> "FeatureSchema":
        if self.kind == "hypergraph" and self.d is None:
            raise ValueError("El esquema de hipergrafo requiere d")
        if self.kind == "graph" and self.d is not None:
            raise ValueError("El esquema de grafo no lleva d")
        return self

    def length(self) -> int:
        """Cantidad de features del esquema."""
        if self.kind == "graph":
            return self.m * (self.m - 1) // 2
        if self.include_degenerate:
            return tensor_size(self.m, self.d)
        return int(strict_tuple_mask(self.m, self.d).sum())


class FeatureVector(BaseModel):
    """Vector de features de un sujeto junto con su esquema."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray
    feature_schema: FeatureSchema

    @field_validator("values", mode="before")
    @classmethod
    def _validate_values(cls, value: object) -> np.ndarray:
        array = np.array(value, dtype=np.float64, copy=True)
        if array.ndim != 1:
            raise ValueError(f"El vector de features debe ser 1-D, tiene {array.ndim} dimensiones")
        if not np.all(np.isfinite(array)):
            raise ValueError("El vector de features contiene valores no finitos")
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _validate_length(self) -> "FeatureVector":
        expected = self.feature_schema.length()
        if self.values.shape[0] != expected:
            raise ValueError(f"Se esperaban {expected} features, se recibieron {self.values.shape[0]}")
        return self


class SvmConfig(BaseModel):
    """Hiperparámetros del SVM lineal por subgradiente."""

    model_config = ConfigDict(frozen=True)

    epochs: int = Field(200, ge=1, description="Pasadas completas sobre el entrenamiento")
    lam: float = Field(1e-4, gt=0, allow_inf_nan=False, description="Regularización L2 λ")
    seed: int = Field(0, ge=0, description="Semilla del orden de ejemplos si no se pasa un stream")


class LinearModel(BaseModel):
    """Modelo lineal con estandarización aprendida del entrenamiento.

    score(x) = w · (x - mean) / scale + bias. Las features con varianza de
    entrenamiento cero tienen scale 1 y peso 0.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    weights: np.ndarray
    bias: float
    mean: np.ndarray
    scale: np.ndarray
    feature_schema: Optional[FeatureSchema] = None

    @field_validator("weights", "mean", "scale", mode="before")
    @classmethod
    def _as_vector(cls, value: object) -> np.ndarray:
        array = np.array(value, dtype=np.float64, copy=True)
        if array.ndim != 1:
            raise ValueError("Los parámetros del modelo deben ser vectores 1-D")
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _validate_shapes(self) -> "LinearModel":
        size = self.weights.shape[0]
        if self.mean.shape[0] != size or self.scale.shape[0] != size:
            raise ValueError("weights, mean y scale deben tener el mismo largo")
        if np.any(self.scale <= 0):
            raise ValueError("Todas las escalas deben ser > 0")
        if self.feature_schema is not None and self.feature_schema.length() != size:
            raise ValueError(f"El esquema define {self.feature_schema.length()} features, el modelo tiene {size}")
        return self

    def standardize(self, features: np.ndarray) -> np.ndarray:
        """Aplica la estandarización aprendida a una matriz (n, p) o vector (p,).

        Raises:
            ContractViolationError: Si la cantidad de features no coincide.
        """
        array = np.asarray(features, dtype=np.float64)
        if array.shape[-1] != self.weights.shape[0]:
            raise ContractViolationError(
                f"El modelo espera {self.weights.shape[0]} features, se recibieron {array.shape[-1]}"
            )
        return (array - self.mean) / self.scale

    def decision_function(self, features: np.ndarray) -> np.ndarray:
        return self.standardize(features) @ self.weights + self.bias


class TrialReport(BaseModel):
    """Métricas de una repetición entrenamiento/prueba."""

    train_accuracy: float = Field(..., ge=0, le=1)
    test_accuracy: float = Field(..., ge=0, le=1)
    f1: float = Field(..., ge=0, le=1)
    split_seed: int = Field(..., ge=0, description="Índice de trial que deriva el stream de partición")


class MeanMetrics(BaseModel):
    """Promedios de las métricas sobre los trials de un tipo de feature."""

    train_accuracy: float
    test_accuracy: float
    f1: float


class ExperimentReport(BaseModel):
    """Documento de salida de `classify`."""

    positive_label: str
    trials: Dict[FeatureKind, List[TrialReport]]
    means: Dict[FeatureKind, MeanMetrics]
    t_statistic: Optional[float] = Field(None, description="t de test accuracy: hipergrafo vs grafo")
    p_value: Optional[float] = Field(None, ge=0, le=1)
    welch: bool = False
    config: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _validate_pairing(self) -> "ExperimentReport":
        counts = {len(reports) for reports in self.trials.values()}
        if len(counts) > 1:
            raise ValueError(f"Cantidad de trials distinta entre tipos de feature: {sorted(counts)}")
        if set(self.means) != set(self.trials):
            raise ValueError("means y trials deben cubrir los mismos tipos de feature")
        return self

    model_config = {
        "ser_json_inf_nan": "constants",
        "json_schema_extra": {
            "examples": [
                {
                    "positive_label": "Y",
                    "trials": {
                        "graph": [{"train_accuracy": 1.0, "test_accuracy": 0.51, "f1": 0.66, "split_seed": 0}],
                        "hypergraph": [{"train_accuracy": 1.0, "test_accuracy": 1.0, "f1": 1.0, "split_seed": 0}],
                    },
                    "means": {
                        "graph": {"train_accuracy": 1.0, "test_accuracy": 0.51, "f1": 0.66},
                        "hypergraph": {"train_accuracy": 1.0, "test_accuracy": 1.0, "f1": 1.0},
                    },
                    "t_statistic": 35.2,
                    "p_value": 0.0,
                    "welch": False,
                    "config": {"seed": 0, "epsilon": 1e-5, "d": 3, "variant": "paper", "trials": 1},
                }
            ]
        },
    }
