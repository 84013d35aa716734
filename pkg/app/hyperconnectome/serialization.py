"""Serialización de hiper-conectomas (JSON) y exportaciones CSV.

Reglas:
- Índices 0-based internamente, 1-based en los documentos.
- Los floats se escriben en su forma más corta que reproduce el valor exacto,
  así serializar -> deserializar -> serializar da bytes idénticos.
"""

from __future__ import annotations

import csv
import io
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from app.core.errors import ParseError
from app.core.tuple_ranking import all_tuples, tensor_size
from app.models.core_models import SymmetricTensor
from app.models.hyperconnectome_models import (
    HyperConnectome,
    HyperConnectomeDocument,
    HyperConnectomeEntry,
    HyperedgeList,
)


def to_document(hc: HyperConnectome, *, config: Optional[Dict[str, Any]] = None) -> HyperConnectomeDocument:
    """Convierte un hiper-conectoma en su documento de intercambio."""
    table = all_tuples(hc.m, hc.d)
    entries = [
        HyperConnectomeEntry(idx=[int(i) + 1 for i in row], w=float(w))
        for row, w in zip(table, hc.tensor.weights)
    ]
    return HyperConnectomeDocument(
        m=hc.m,
        d=hc.d,
        epsilon=hc.epsilon,
        variant=hc.variant,
        log_base=hc.log_base,
        roi_labels=list(hc.roi_labels),
        source_id=hc.source_id,
        config=config,
        entries=entries,
    )


def serialize_hc(hc: HyperConnectome, *, config: Optional[Dict[str, Any]] = None) -> str:
    """Serializa el hiper-conectoma como documento JSON."""
    return to_document(hc, config=config).model_dump_json(indent=2) + "\n"


def _format_location(loc: Sequence[Any]) -> str:
    return ".".join(str(part) for part in loc) or "<documento>"


def deserialize_hc(document: str | bytes) -> HyperConnectome:
    """Reconstruye un hiper-conectoma desde su documento JSON.

    Raises:
        ParseError: Si el documento está truncado, mal formado o es inconsistente.
    """
    try:
        parsed = HyperConnectomeDocument.model_validate_json(document)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(
            f"Documento de hiper-conectoma inválido: {first['msg']}",
            location=_format_location(first.get("loc", ())),
        ) from exc

    expected = tensor_size(parsed.m, parsed.d)
    if len(parsed.entries) != expected:
        raise ParseError(
            f"Se esperaban {expected} entradas, hay {len(parsed.entries)}",
            location="entries",
        )
    if len(parsed.roi_labels) != parsed.m:
        raise ParseError(
            f"roi_labels tiene {len(parsed.roi_labels)} nombres para m={parsed.m}",
            location="roi_labels",
        )

    table = all_tuples(parsed.m, parsed.d)
    weights = np.empty(expected)
    for rank, entry in enumerate(parsed.entries):
        zero_based = [i - 1 for i in entry.idx]
        if zero_based != table[rank].tolist():
            raise ParseError(
                f"Tupla {entry.idx} fuera del orden de rango esperado",
                location=f"entries.{rank}.idx",
            )
        weights[rank] = entry.w

    try:
        return HyperConnectome(
            tensor=SymmetricTensor(m=parsed.m, d=parsed.d, weights=weights),
            epsilon=parsed.epsilon,
            d=parsed.d,
            variant=parsed.variant,
            roi_labels=parsed.roi_labels,
            source_id=parsed.source_id,
            log_base=parsed.log_base,
        )
    except ValidationError as exc:
        raise ParseError(f"Documento inconsistente: {exc.errors()[0]['msg']}") from exc


def export_pairwise_csv(matrix: np.ndarray, labels: Sequence[str]) -> str:
    """Matriz m x m como CSV con fila y columna de etiquetas de ROI."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([""] + list(labels))
    for label, row in zip(labels, matrix):
        writer.writerow([label] + [repr(float(v)) for v in row])
    return buffer.getvalue()


def export_edges_csv(edges: HyperedgeList, labels: Sequence[str]) -> str:
    """Lista de hiperaristas como CSV: índices 1-based, etiquetas y peso."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["indices", "labels", "weight"])
    for index_tuple, weight in edges.edges:
        one_based: List[str] = [str(i + 1) for i in index_tuple]
        names = [labels[i] for i in index_tuple]
        writer.writerow([" ".join(one_based), " ".join(names), repr(weight)])
    return buffer.getvalue()
