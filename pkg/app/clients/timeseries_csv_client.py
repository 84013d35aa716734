"""Cliente de archivos CSV de series temporales.

Orientación por defecto: filas = variables (ROIs), columnas = muestras, igual
que X(i, j). Con `transpose=True` se aceptan filas = muestras.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.errors import ParseError
from app.models.core_models import TimeSeriesMatrix

logger = logging.getLogger(__name__)

RoiRange = Tuple[int, int]


def read_utf8(source: Path) -> str:
    """Lee el archivo como UTF-8.

    Raises:
        ParseError: Si los bytes no son UTF-8 válido; la ubicación es el byte ofensivo.
        OSError: Si el archivo no se puede leer.
    """
    raw = source.read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("Archivo no es UTF-8 válido", location=f"{source}:byte {exc.start}") from exc


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


class TimeSeriesCsvClient:
    """Lee y escribe matrices de series temporales en CSV."""

    def read(
        self,
        path: Path | str,
        *,
        roi_range: Optional[RoiRange] = None,
        samples_cap: Optional[int] = None,
        transpose: bool = False,
    ) -> TimeSeriesMatrix:
        """Ingiere un archivo CSV como `TimeSeriesMatrix`.

        Args:
            path: Archivo CSV.
            roi_range: Rango 1-based inclusivo (inicio, fin) de filas a conservar.
            samples_cap: Cantidad máxima de muestras (primeras columnas).
            transpose: Si el archivo tiene filas = muestras.

        Returns:
            TimeSeriesMatrix: Matriz recortada con etiquetas de ROI.

        Raises:
            ParseError: Filas desparejas, celdas no numéricas o no finitas, o
                selección vacía.
            OSError: Si el archivo no se puede leer.
        """
        source = Path(path)
        text = read_utf8(source)
        rows = [(line_no, row) for line_no, row in enumerate(csv.reader(io.StringIO(text)), start=1) if row]
        if not rows:
            raise ParseError("Archivo vacío", location=str(source))

        if transpose:
            values, labels = self._parse_transposed(rows, source)
        else:
            values, labels = self._parse_rows(rows, source)

        m = values.shape[0]
        first, last = roi_range if roi_range is not None else (1, m)
        if first < 1 or last > m or first > last:
            raise ParseError(
                f"Selección de ROIs {first}:{last} vacía o fuera de 1:{m}", location=str(source)
            )
        values = values[first - 1 : last]
        if labels is None:
            labels = [str(i) for i in range(first, last + 1)]
        else:
            labels = labels[first - 1 : last]

        if samples_cap is not None:
            if samples_cap < 1:
                raise ParseError(f"El tope de muestras debe ser >= 1 ({samples_cap})", location=str(source))
            values = values[:, :samples_cap]
        if values.shape[1] < 1:
            raise ParseError("La selección no tiene muestras", location=str(source))

        logger.debug(f"Serie leída de {source}: {values.shape[0]} ROIs x {values.shape[1]} muestras")
        return TimeSeriesMatrix(values=values, labels=labels)

    def _numeric_row(self, cells: Sequence[str], source: Path, line_no: int, offset: int) -> List[float]:
        parsed = []
        for col, cell in enumerate(cells, start=1 + offset):
            try:
                value = float(cell)
            except ValueError as exc:
                raise ParseError(
                    f"Celda no numérica {cell!r}", location=f"{source}:{line_no}:{col}"
                ) from exc
            if not math.isfinite(value):
                raise ParseError(f"Valor no finito {cell!r}", location=f"{source}:{line_no}:{col}")
            parsed.append(value)
        return parsed

    def _parse_rows(self, rows, source: Path) -> Tuple[np.ndarray, Optional[List[str]]]:
        has_labels = not _is_number(rows[0][1][0])
        labels: List[str] = []
        table: List[List[float]] = []
        width = None
        for line_no, row in rows:
            if has_labels != (not _is_number(row[0])):
                raise ParseError(
                    "Columna de etiquetas inconsistente entre filas", location=f"{source}:{line_no}"
                )
            cells = row[1:] if has_labels else row
            if width is None:
                width = len(cells)
            elif len(cells) != width:
                raise ParseError(
                    f"Fila desigual: {len(cells)} valores, se esperaban {width}",
                    location=f"{source}:{line_no}",
                )
            if has_labels:
                labels.append(row[0].strip())
            table.append(self._numeric_row(cells, source, line_no, 1 if has_labels else 0))
        return np.array(table, dtype=np.float64), (labels if has_labels else None)

    def _parse_transposed(self, rows, source: Path) -> Tuple[np.ndarray, Optional[List[str]]]:
        header = None
        if not all(_is_number(cell) for cell in rows[0][1]):
            header = [cell.strip() for cell in rows[0][1]]
            rows = rows[1:]
        if not rows:
            raise ParseError("El archivo no tiene muestras", location=str(source))
        width = len(header) if header is not None else len(rows[0][1])
        table = []
        for line_no, row in rows:
            if len(row) != width:
                raise ParseError(
                    f"Fila desigual: {len(row)} valores, se esperaban {width}",
                    location=f"{source}:{line_no}",
                )
            table.append(self._numeric_row(row, source, line_no, 0))
        return np.array(table, dtype=np.float64).T, header

    def format(self, ts: TimeSeriesMatrix) -> str:
        """Serializa la matriz (filas = variables) sin etiquetas, con floats exactos."""
        lines = [",".join(repr(float(v)) for v in row) for row in ts.values]
        return "\n".join(lines) + "\n"


timeseries_csv_client = TimeSeriesCsvClient()


def ingest_timeseries(
    path: Path | str,
    roi_range: Optional[RoiRange] = None,
    samples_cap: Optional[int] = None,
    *,
    transpose: bool = False,
) -> TimeSeriesMatrix:
    """Atajo funcional sobre `timeseries_csv_client.read`."""
    return timeseries_csv_client.read(
        path, roi_range=roi_range, samples_cap=samples_cap, transpose=transpose
    )
