"""Schemas Pydantic de la línea de comandos."""

from __future__ import annotations

from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from app.models.estimator_models import EstimatorConfig, EstimatorVariant
from app.models.learn_models import SvmConfig

# Campos de ejecución que no cambian el contenido de las salidas.
EXECUTION_ONLY_FIELDS = {"output", "workers"}


def parse_roi_range(text: str) -> Tuple[int, int]:
    """Convierte "A:B" (1-based, inclusivo) en la tupla (A, B).

    Raises:
        ValueError: Si el texto no tiene la forma esperada o el rango es vacío.
    """
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"Rango de ROIs inválido {text!r}; se espera A:B")
    try:
        first, last = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValueError(f"Rango de ROIs inválido {text!r}; A y B deben ser enteros") from exc
    if first < 1 or first > last:
        raise ValueError(f"Rango de ROIs vacío o no 1-based: {text!r}")
    return first, last


class RunConfig(BaseModel):
    """Parámetros resueltos de un comando (flags > entorno > archivo > defaults)."""

    command: Literal["simulate", "connectome", "hyperconnectome", "classify", "report"]
    input: Optional[str] = Field(None, description="CSV de un sujeto o directorio de cohorte")
    output: Optional[str] = Field(None, description="Archivo o directorio de salida")

    # Estimador
    epsilon: float = Field(1e-5, gt=0, allow_inf_nan=False)
    order: int = Field(3, ge=2, le=4, description="d: vértices por hiperarista")
    variant: EstimatorVariant = EstimatorVariant.PAPER_TUPLE_SUM
    log_base: Literal["nat", "bit"] = "nat"
    threshold: float = Field(256.0, allow_inf_nan=False)
    exclude_degenerate: bool = False
    reduce: bool = False
    edges: bool = False

    # Ingesta
    roi: Optional[Tuple[int, int]] = Field(None, description="Rango 1-based inclusivo de ROIs")
    samples: int = Field(20, ge=1, description="Tope de muestras por serie")
    transpose: bool = False

    # Simulación
    cohort: Literal["parity", "clinical"] = "parity"
    subjects_x: Optional[int] = Field(None, ge=0)
    subjects_y: Optional[int] = Field(None, ge=0)
    rois: int = Field(61, ge=3, description="Variables por sujeto en la cohorte clínica")

    # Experimento
    seed: int = Field(0, ge=0)
    trials: int = Field(10, ge=1)
    fraction: float = Field(0.5, gt=0, lt=1)
    features: Literal["graph", "hypergraph", "both"] = "both"
    welch: bool = False
    positive_label: Optional[str] = None
    svm_epochs: int = Field(200, ge=1)
    svm_lambda: float = Field(1e-4, gt=0, allow_inf_nan=False)

    # Ejecución
    workers: int = Field(1, ge=1)

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                {
                    "command": "hyperconnectome",
                    "input": "cohort/",
                    "output": "out/",
                    "epsilon": 1e-5,
                    "order": 3,
                    "variant": "paper",
                    "roi": [1, 30],
                    "samples": 20,
                }
            ]
        },
    }

    @field_validator("roi", mode="before")
    @classmethod
    def _parse_roi(cls, value: Any) -> Any:
        if isinstance(value, str):
            return parse_roi_range(value)
        return value

    @field_validator("roi")
    @classmethod
    def _validate_roi(cls, value: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if value is not None and (value[0] < 1 or value[0] > value[1]):
            raise ValueError(f"Rango de ROIs vacío o no 1-based: {value}")
        return value

    def echo(self) -> Dict[str, Any]:
        """Copia de la configuración que se embebe en los documentos de salida."""
        return self.model_dump(mode="json", exclude=EXECUTION_ONLY_FIELDS)

    def estimator_config(self) -> EstimatorConfig:
        return EstimatorConfig(
            epsilon=self.epsilon,
            d=self.order,
            variant=self.variant,
            log_base=self.log_base,
            include_degenerate=not self.exclude_degenerate,
        )

    def svm_config(self) -> SvmConfig:
        return SvmConfig(epochs=self.svm_epochs, lam=self.svm_lambda, seed=self.seed)
