"""Streams aleatorios reproducibles.

Toda la aleatoriedad sale de una semilla explícita; nunca de entropía del entorno.
Cada stream se identifica con (seed, *claves) y se construye con un
`SeedSequence`, así regenerar el sujeto k no depende del orden de generación.
"""

from __future__ import annotations

import numpy as np

from app.core.errors import ContractViolationError


def derive_stream(seed: int, *keys: int) -> np.random.Generator:
    """Devuelve un generador independiente para (seed, *keys).

    Raises:
        ContractViolationError: Si la semilla o alguna clave es negativa.
    """
    entropy = [int(seed), *(int(k) for k in keys)]
    if any(value < 0 for value in entropy):
        raise ContractViolationError(f"Semilla y claves deben ser >= 0: {entropy}")
    return np.random.default_rng(np.random.SeedSequence(entropy))
