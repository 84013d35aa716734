"""Escritura atómica de archivos: temporal en el mismo directorio, fsync, rename y fsync del directorio."""

from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path

logger = logging.getLogger(__name__)


def _fsync_directory(directory: Path) -> None:
    """Persiste la entrada del directorio tras el rename (solo POSIX)."""
    if os.name != "posix":
        return
    fd = os.open(directory, os.O_RDONLY)
    try:
        os.fsync(fd)
    finally:
        os.close(fd)


def write_text_atomic(path: Path | str, text: str) -> Path:
    """Escribe `text` en `path` de forma atómica y durable.

    Args:
        path: Archivo destino; el directorio padre se crea si no existe.
        text: Contenido UTF-8.

    Returns:
        Path: Ruta escrita.

    Raises:
        OSError: Si falla la escritura o el rename.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)

    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, target)
        _fsync_directory(target.parent)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise

    logger.debug(f"Archivo escrito: {target}")
    return target
