"""Clientes de archivos (series CSV y directorios de cohorte)."""

from app.clients.dataset_store_client import MANIFEST_NAME, DatasetStoreClient, dataset_store_client
from app.clients.timeseries_csv_client import (
    TimeSeriesCsvClient,
    ingest_timeseries,
    timeseries_csv_client,
)

__all__ = [
    "MANIFEST_NAME",
    "DatasetStoreClient",
    "TimeSeriesCsvClient",
    "dataset_store_client",
    "ingest_timeseries",
    "timeseries_csv_client",
]
