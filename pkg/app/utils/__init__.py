"""Utilidades compartidas del proyecto."""

from app.utils.atomic_io import write_text_atomic
from app.utils.parallel import run_ordered
from app.utils.random_streams import derive_stream

__all__ = [
    "derive_stream",
    "run_ordered",
    "write_text_atomic",
]
