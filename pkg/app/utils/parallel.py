"""Pool de workers acotado sobre joblib.

Los resultados siempre vuelven en el orden de entrada, sin importar el orden
de finalización.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterable, List, Literal, TypeVar

from joblib import Parallel, delayed

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_ordered(
    func: Callable[..., R],
    items: Iterable[T],
    *,
    n_jobs: int = 1,
    prefer: Literal["processes", "threads"] = "processes",
) -> List[R]:
    """Aplica `func` a cada elemento con hasta `n_jobs` workers.

    Con `n_jobs <= 1` se ejecuta en el proceso actual, sin joblib.
    """
    work = list(items)
    if n_jobs <= 1 or len(work) < 2:
        return [func(item) for item in work]

    logger.debug(f"Repartiendo {len(work)} tareas en {n_jobs} workers ({prefer})")
    return Parallel(n_jobs=n_jobs, prefer=prefer)(delayed(func)(item) for item in work)
