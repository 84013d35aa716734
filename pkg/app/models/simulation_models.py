"""Modelos Pydantic para cohortes simuladas o ingeridas y su manifiesto en disco."""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.core_models import TimeSeriesMatrix


class LabeledSubject(BaseModel):
    """Un sujeto de la cohorte con su etiqueta de clase."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    subject_id: str
    label: str
    timeseries: TimeSeriesMatrix
    stream_key: Optional[List[int]] = Field(
        None, description="Claves (seed, índice) del stream aleatorio que generó al sujeto"
    )


class SimDataset(BaseModel):
    """Colección etiquetada de sujetos (simulados o ingeridos)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    subjects: List[LabeledSubject]
    samples_per_subject: int = Field(..., ge=1)
    seed: Optional[int] = Field(None, ge=0)
    positive_label: str = "Y"
    negative_label: str = "X"

    @model_validator(mode="after")
    def _validate_labels(self) -> "SimDataset":
        allowed = {self.positive_label, self.negative_label}
        for subject in self.subjects:
            if subject.label not in allowed:
                raise ValueError(f"Etiqueta desconocida {subject.label!r} en {subject.subject_id}")
        return self

    def labels_pm1(self) -> List[int]:
        """Etiquetas como ±1 (+1 = clase positiva)."""
        return [1 if s.label == self.positive_label else -1 for s in self.subjects]

    def count(self, label: str) -> int:
        return sum(1 for s in self.subjects if s.label == label)


class ManifestEntry(BaseModel):
    """Fila del manifiesto: archivo, etiqueta y semilla del sujeto."""

    file: str
    label: str
    subject_id: str
    stream_key: Optional[List[int]] = None


class DatasetManifest(BaseModel):
    """Manifiesto JSON de un directorio de cohorte."""

    samples_per_subject: int = Field(..., ge=1)
    seed: Optional[int] = None
    positive_label: str = "Y"
    negative_label: str = "X"
    cohort: str = Field("parity", description="Familia generadora: parity | clinical | ingested")
    config: Optional[Dict[str, Any]] = None
    subjects: List[ManifestEntry]

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "samples_per_subject": 20,
                    "seed": 0,
                    "positive_label": "Y",
                    "negative_label": "X",
                    "cohort": "parity",
                    "config": None,
                    "subjects": [
                        {"file": "subject_0000.csv", "label": "X", "subject_id": "subject_0000", "stream_key": [0, 0]}
                    ],
                }
            ]
        }
    }
