"""Jerarquía de errores del proyecto.

Cada error lleva su `exit_code`, que `main.py` usa como código de salida:
- 1: violación de contrato en entradas o parámetros
- 2: fallo de I/O o de parseo
"""

from __future__ import annotations

from typing import Optional


class HyperConnectomeError(Exception):
    """Error base del proyecto."""

    exit_code: int = 1

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class ContractViolationError(HyperConnectomeError):
    """Entrada o parámetro fuera de su contrato documentado."""

    exit_code = 1


class DegenerateVarianceError(ContractViolationError):
    """Una de las series tiene varianza muestral cero."""


class InsufficientSamplesError(ContractViolationError):
    """No hay suficientes muestras para el estimador pedido."""


class InsufficientVariablesError(ContractViolationError):
    """No hay suficientes variables (ROIs) para construir un conectoma."""


class DegenerateLabelsError(ContractViolationError):
    """El conjunto de entrenamiento contiene una sola clase."""


class ParseError(HyperConnectomeError):
    """Documento o archivo mal formado.

    Args:
        message: Descripción del problema.
        location: Ubicación legible (archivo, fila, campo) si se conoce.
    """

    exit_code = 2

    def __init__(self, message: str, *, location: Optional[str] = None) -> None:
        full = f"{message} (en {location})" if location else message
        super().__init__(full)
        self.location = location


def require(condition: bool, message: str) -> None:
    """Lanza `ContractViolationError` si `condition` es falsa."""
    if not condition:
        raise ContractViolationError(message)


class PipelineError(HyperConnectomeError):
    """Error reportado por un nodo del pipeline de clasificación."""

    def __init__(self, message: str, *, exit_code: int = 1) -> None:
        super().__init__(message)
        self.exit_code = exit_code
