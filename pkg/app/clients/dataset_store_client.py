"""Cliente del directorio de cohorte: un CSV por sujeto más `manifest.json`."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from app.clients.timeseries_csv_client import RoiRange, read_utf8, timeseries_csv_client
from app.core.errors import ParseError
from app.models.simulation_models import DatasetManifest, LabeledSubject, ManifestEntry, SimDataset
from app.utils.atomic_io import write_text_atomic

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class DatasetStoreClient:
    """Persiste y recupera cohortes etiquetadas."""

    def write(
        self,
        dataset: SimDataset,
        directory: Path | str,
        *,
        cohort: str = "parity",
        config: Optional[Dict[str, Any]] = None,
    ) -> Path:
        """Escribe los CSV de cada sujeto y el manifiesto.

        Returns:
            Path: Ruta del manifiesto.

        Raises:
            OSError: Si falla alguna escritura.
        """
        root = Path(directory)
        entries = []
        for subject in dataset.subjects:
            file_name = f"{subject.subject_id}.csv"
            write_text_atomic(root / file_name, timeseries_csv_client.format(subject.timeseries))
            entries.append(
                ManifestEntry(
                    file=file_name,
                    label=subject.label,
                    subject_id=subject.subject_id,
                    stream_key=subject.stream_key,
                )
            )

        manifest = DatasetManifest(
            samples_per_subject=dataset.samples_per_subject,
            seed=dataset.seed,
            positive_label=dataset.positive_label,
            negative_label=dataset.negative_label,
            cohort=cohort,
            config=config,
            subjects=entries,
        )
        path = write_text_atomic(root / MANIFEST_NAME, manifest.model_dump_json(indent=2) + "\n")
        logger.info(f"💾 Cohorte escrita en {root}: {len(entries)} sujetos")
        return path

    def read_manifest(self, directory: Path | str) -> DatasetManifest:
        """Lee y valida el manifiesto.

        Raises:
            ParseError: Si el manifiesto está mal formado.
            OSError: Si no se puede leer.
        """
        path = Path(directory) / MANIFEST_NAME
        try:
            return DatasetManifest.model_validate_json(read_utf8(path))
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(str(p) for p in first.get("loc", ())) or "<documento>"
            raise ParseError(f"Manifiesto inválido: {first['msg']}", location=f"{path}:{location}") from exc

    def read(
        self,
        directory: Path | str,
        *,
        roi_range: Optional[RoiRange] = None,
        samples_cap: Optional[int] = None,
        transpose: bool = False,
    ) -> SimDataset:
        """Carga todos los sujetos listados en el manifiesto.

        Raises:
            ParseError: Si el manifiesto o algún CSV está mal formado, o si los
                sujetos no comparten la forma (ROIs x muestras) del primero.
        """
        root = Path(directory)
        manifest = self.read_manifest(root)
        subjects = []
        for entry in manifest.subjects:
            ts = timeseries_csv_client.read(
                root / entry.file,
                roi_range=roi_range,
                samples_cap=samples_cap,
                transpose=transpose,
            )
            if subjects and ts.values.shape != subjects[0].timeseries.values.shape:
                first = subjects[0].timeseries
                raise ParseError(
                    f"Forma {ts.m}x{ts.n} distinta a la del primer sujeto ({first.m}x{first.n})",
                    location=str(root / entry.file),
                )
            subjects.append(
                LabeledSubject(
                    subject_id=entry.subject_id,
                    label=entry.label,
                    timeseries=ts,
                    stream_key=entry.stream_key,
                )
            )

        try:
            dataset = SimDataset(
                subjects=subjects,
                samples_per_subject=subjects[0].timeseries.n if subjects else manifest.samples_per_subject,
                seed=manifest.seed,
                positive_label=manifest.positive_label,
                negative_label=manifest.negative_label,
            )
        except ValidationError as exc:
            raise ParseError(f"Cohorte inconsistente: {exc.errors()[0]['msg']}", location=str(root)) from exc

        logger.info(f"📂 Cohorte cargada de {root}: {len(subjects)} sujetos")
        return dataset


dataset_store_client = DatasetStoreClient()
