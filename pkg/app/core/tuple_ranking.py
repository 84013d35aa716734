"""Ranking combinatorio de d-tuplas no decrecientes.

Las tuplas `0 <= i_1 <= ... <= i_d < m` se ordenan lexicográficamente y se
numeran de 0 a C(m+d-1, d) - 1. Es el orden en que
`itertools.combinations_with_replacement(range(m), d)` las genera.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence, Tuple

import numpy as np

from app.core.errors import ContractViolationError


def tensor_size(m: int, d: int) -> int:
    """Cantidad de tuplas no decrecientes de orden `d` sobre `m` índices."""
    if m < 0 or d < 1:
        raise ContractViolationError(f"Tamaño inválido: m={m}, d={d}")
    return comb(m + d - 1, d)


def _completions(remaining: int, low: int, m: int) -> int:
    # tuplas no decrecientes de largo `remaining` con valores en [low, m)
    if remaining == 0:
        return 1
    return comb(m - low + remaining - 1, remaining)


def tuple_rank(index_tuple: Sequence[int], m: int, d: int) -> int:
    """Devuelve el rango lexicográfico de una tupla no decreciente.

    Args:
        index_tuple: Tupla ordenada de índices 0-based.
        m: Cantidad de variables.
        d: Orden de la tupla.

    Returns:
        int: Rango en [0, C(m+d-1, d)).

    Raises:
        ContractViolationError: Si la tupla no está ordenada, tiene largo
            distinto de `d` o contiene índices fuera de [0, m).
    """
    values = [int(v) for v in index_tuple]
    if len(values) != d:
        raise ContractViolationError(f"Se esperaba una tupla de largo {d}: {tuple(values)}")
    if any(v < 0 or v >= m for v in values):
        raise ContractViolationError(f"Índices fuera de [0, {m}): {tuple(values)}")
    if any(a > b for a, b in zip(values, values[1:])):
        raise ContractViolationError(f"La tupla no es no decreciente: {tuple(values)}")

    rank = 0
    previous = 0
    for position, value in enumerate(values):
        remaining = d - position - 1
        for smaller in range(previous, value):
            rank += _completions(remaining, smaller, m)
        previous = value
    return rank


def tuple_unrank(rank: int, m: int, d: int) -> Tuple[int, ...]:
    """Inversa de `tuple_rank`.

    Raises:
        ContractViolationError: Si `rank` está fuera de [0, C(m+d-1, d)).
    """
    total = tensor_size(m, d)
    if rank < 0 or rank >= total:
        raise ContractViolationError(f"Rango {rank} fuera de [0, {total})")

    result = []
    previous = 0
    left = rank
    for position in range(d):
        remaining = d - position - 1
        value = previous
        while True:
            block = _completions(remaining, value, m)
            if left < block:
                break
            left -= block
            value += 1
        result.append(value)
        previous = value
    return tuple(result)


@lru_cache(maxsize=32)
def _all_tuples_cached(m: int, d: int) -> np.ndarray:
    table = np.array(list(combinations_with_replacement(range(m), d)), dtype=np.intp)
    table = table.reshape(-1, d)
    table.setflags(write=False)
    return table


def all_tuples(m: int, d: int) -> np.ndarray:
    """Tabla (C(m+d-1, d), d) con todas las tuplas en orden de rango."""
    tensor_size(m, d)
    return _all_tuples_cached(m, d)


def strict_tuple_mask(m: int, d: int) -> np.ndarray:
    """Máscara booleana de las tuplas sin índices repetidos, en orden de rango."""
    table = all_tuples(m, d)
    if d == 1:
        return np.ones(table.shape[0], dtype=bool)
    return np.all(np.diff(table, axis=1) > 0, axis=1)
