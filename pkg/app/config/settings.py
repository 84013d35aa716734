"""Valores por defecto de la aplicación.

Precedencia: flags de la CLI > variables `HYPERCONN_*` > archivo `--config`
(formato dotenv, mismas claves `HYPERCONN_*`) > valores de esta clase.
Ninguna variable es obligatoria.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Literal, Optional, get_args

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.models.estimator_models import EstimatorVariant

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
LOG_LEVELS = get_args(LogLevel)


class Settings(BaseSettings):
    """Configuración por defecto de comandos, estimadores y clasificador."""

    # Estimador
    epsilon: float = Field(1e-5, gt=0)
    order: int = Field(3, ge=2, le=4)
    variant: EstimatorVariant = EstimatorVariant.PAPER_TUPLE_SUM
    log_base: Literal["nat", "bit"] = "nat"
    threshold: float = 256.0

    # Ingesta
    samples: int = Field(20, ge=1)

    # Experimento
    seed: int = Field(0, ge=0)
    trials: int = Field(10, ge=1)
    fraction: float = Field(0.5, gt=0, lt=1)
    svm_epochs: int = Field(200, ge=1)
    svm_lambda: float = Field(1e-4, gt=0)

    # Ejecución
    workers: int = Field(1, ge=1)
    log_level: LogLevel = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="HYPERCONN_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_log_level(cls, value: Any) -> Any:
        return value.upper() if isinstance(value, str) else value


def load_settings(config_file: Optional[Path | str] = None) -> Settings:
    """Construye `Settings` leyendo además un archivo dotenv explícito.

    Raises:
        OSError: Si el archivo indicado no existe.
    """
    if config_file is None:
        return Settings()
    path = Path(config_file)
    if not path.is_file():
        raise FileNotFoundError(f"No existe el archivo de configuración {path}")
    return Settings(_env_file=path)

