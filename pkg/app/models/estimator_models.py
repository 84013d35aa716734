"""Modelos Pydantic para la configuración de los estimadores de correlación total."""

from __future__ import annotations

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class EstimatorVariant(str, Enum):
    """Variante de normalización del estimador de bolas-ε.

    - `paper`: suma sobre todas las N^d tuplas de muestras (multiplicidad incluida).
    - `plugin`: cada celda de valores alineados distinta aporta una sola vez.
    - `aligned`: resustitución sobre las muestras alineadas j, O(N^2) por tupla.
    """

    PAPER_TUPLE_SUM = "paper"
    DISTINCT_CELL_PLUGIN = "plugin"
    ALIGNED_RESUBSTITUTION = "aligned"


LogBase = Literal["nat", "bit"]


class EpsilonThreshold(BaseModel):
    """Radio de la bola-ε en unidades de medición."""

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(..., gt=0, allow_inf_nan=False, description="Radio ε > 0")


class EstimatorConfig(BaseModel):
    """Parámetros del hiper-conectoma compartidos por CLI, features y pipeline."""

    epsilon: float = Field(1e-5, gt=0, allow_inf_nan=False, description="Radio de la bola-ε")
    d: int = Field(3, ge=2, le=4, description="Orden de las hiperaristas")
    variant: EstimatorVariant = Field(
        EstimatorVariant.PAPER_TUPLE_SUM, description="Variante de normalización"
    )
    log_base: LogBase = Field("nat", description="Unidades de los pesos reportados")
    include_degenerate: bool = Field(
        True, description="Incluir tuplas con índices repetidos en features y reducciones"
    )

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                {
                    "epsilon": 1e-5,
                    "d": 3,
                    "variant": "paper",
                    "log_base": "nat",
                    "include_degenerate": True,
                }
            ]
        },
    }
