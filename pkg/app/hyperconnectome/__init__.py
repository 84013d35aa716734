"""Hiper-conectomas: construcción, umbralado, reducción y serialización."""

from app.hyperconnectome.builder import build_hyperconnectome
from app.hyperconnectome.edges import DEFAULT_EDGE_THRESHOLD, pairwise_reduce, significant_edges
from app.hyperconnectome.serialization import (
    deserialize_hc,
    export_edges_csv,
    export_pairwise_csv,
    serialize_hc,
    to_document,
)

__all__ = [
    "DEFAULT_EDGE_THRESHOLD",
    "build_hyperconnectome",
    "deserialize_hc",
    "export_edges_csv",
    "export_pairwise_csv",
    "pairwise_reduce",
    "serialize_hc",
    "significant_edges",
    "to_document",
]
