"""Comandos de la CLI: simulate, connectome, hyperconnectome, classify y report."""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from app.clients.dataset_store_client import MANIFEST_NAME, dataset_store_client
from app.clients.timeseries_csv_client import timeseries_csv_client
from app.config.settings import LOG_LEVELS, Settings, load_settings
from app.controller.cli.schemas import RunConfig
from app.core.errors import ContractViolationError, InsufficientVariablesError, ParseError
from app.estimators.correlation import connectome
from app.hyperconnectome.builder import build_hyperconnectome
from app.hyperconnectome.edges import pairwise_reduce, significant_edges
from app.hyperconnectome.serialization import export_edges_csv, export_pairwise_csv, serialize_hc
from app.models.core_models import TimeSeriesMatrix
from app.models.estimator_models import EstimatorVariant
from app.models.learn_models import ExperimentReport
from app.pipeline.graph.experiment_graph import run_classification
from app.simulation.generators import gen_cohort_standin, gen_dataset
from app.utils.atomic_io import write_text_atomic
from app.utils.parallel import run_ordered

logger = logging.getLogger(__name__)

RUN_CONFIG_NAME = "run_config.json"

# Campos cuyo default viene de `Settings` cuando el flag no se pasa.
_SETTINGS_FIELDS = (
    "epsilon",
    "order",
    "variant",
    "log_base",
    "threshold",
    "samples",
    "seed",
    "trials",
    "fraction",
    "svm_epochs",
    "svm_lambda",
    "workers",
)

_PARITY_DEFAULTS = (1000, 1000)
_CLINICAL_DEFAULTS = (124, 104)


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser cuyos errores de uso salen con código 1 (violación de contrato)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage()
        self.exit(1, f"{self.prog}: error: {message}\n")


# ===== Resolución de configuración =====


def resolve_run_config(args: argparse.Namespace, defaults: Optional[Settings] = None) -> RunConfig:
    """Combina flags, entorno, archivo `--config` y defaults en un `RunConfig`.

    Args:
        args: Namespace del parser.
        defaults: `Settings` ya cargados; si falta se leen de `--config` y del entorno.

    Raises:
        ValidationError: Si algún parámetro queda fuera de rango.
        OSError: Si el archivo de configuración no existe.
    """
    if defaults is None:
        defaults = load_settings(getattr(args, "config", None))
    values = {
        name: value
        for name, value in vars(args).items()
        if name in RunConfig.model_fields and value is not None
    }
    for name in _SETTINGS_FIELDS:
        values.setdefault(name, getattr(defaults, name))
    return RunConfig(**values)


def _require_path(value: Optional[str], flag: str) -> Path:
    if not value:
        raise ContractViolationError(f"El comando requiere {flag}")
    return Path(value)


def _write_run_config(directory: Path, config: RunConfig) -> None:
    write_text_atomic(directory / RUN_CONFIG_NAME, json.dumps(config.echo(), indent=2) + "\n")


def _load_subjects(config: RunConfig) -> List[Tuple[str, TimeSeriesMatrix]]:
    """Lee un CSV suelto o todos los sujetos de un directorio de cohorte."""
    source = _require_path(config.input, "--input")
    if source.is_dir():
        dataset = dataset_store_client.read(
            source, roi_range=config.roi, samples_cap=config.samples, transpose=config.transpose
        )
        return [(s.subject_id, s.timeseries) for s in dataset.subjects]
    ts = timeseries_csv_client.read(
        source, roi_range=config.roi, samples_cap=config.samples, transpose=config.transpose
    )
    return [(source.stem, ts)]


# ===== Comandos =====


def cmd_simulate(config: RunConfig) -> Path:
    """Genera la cohorte sintética y la escribe como directorio con manifiesto.

    Returns:
        Path: Directorio de la cohorte.
    """
    output = _require_path(config.output, "--output")
    defaults = _CLINICAL_DEFAULTS if config.cohort == "clinical" else _PARITY_DEFAULTS
    subjects_x = config.subjects_x if config.subjects_x is not None else defaults[0]
    subjects_y = config.subjects_y if config.subjects_y is not None else defaults[1]
    resolved = config.model_copy(update={"subjects_x": subjects_x, "subjects_y": subjects_y})

    if config.cohort == "clinical":
        dataset = gen_cohort_standin(
            n_case=subjects_y,
            n_control=subjects_x,
            m=config.rois,
            n=config.samples,
            seed=config.seed,
            n_jobs=config.workers,
        )
    else:
        dataset = gen_dataset(subjects_x, subjects_y, config.samples, config.seed, n_jobs=config.workers)

    dataset_store_client.write(dataset, output, cohort=config.cohort, config=resolved.echo())
    return output


def cmd_connectome(config: RunConfig) -> List[Path]:
    """Escribe la matriz de Pearson de cada sujeto como CSV con etiquetas."""
    output = _require_path(config.output, "--output")
    written = []
    for subject_id, ts in _load_subjects(config):
        if ts.m < 2:
            raise InsufficientVariablesError(f"{subject_id}: un conectoma requiere al menos 2 ROIs (m={ts.m})")
        cm = connectome(ts)
        path = output / f"{subject_id}.connectome.csv"
        write_text_atomic(path, export_pairwise_csv(cm.entries, ts.roi_labels()))
        written.append(path)
    _write_run_config(output, config)
    logger.info(f"💾 {len(written)} conectomas escritos en {output}")
    return written


def _hyperconnectome_files(job: Tuple[str, TimeSeriesMatrix, RunConfig, int]) -> Dict[str, str]:
    subject_id, ts, config, inner_jobs = job
    hc = build_hyperconnectome(
        ts,
        config.order,
        config.epsilon,
        config.variant,
        log_base=config.log_base,
        source_id=subject_id,
        n_jobs=inner_jobs,
    )
    include_degenerate = not config.exclude_degenerate
    files = {f"{subject_id}.hc.json": serialize_hc(hc, config=config.echo())}
    if config.reduce:
        reduced = pairwise_reduce(hc, include_degenerate=include_degenerate)
        files[f"{subject_id}.pairwise.csv"] = export_pairwise_csv(reduced, hc.roi_labels)
    if config.edges:
        edges = significant_edges(hc, config.threshold, include_degenerate=include_degenerate)
        files[f"{subject_id}.edges.csv"] = export_edges_csv(edges, hc.roi_labels)
    return files


def cmd_hyperconnectome(config: RunConfig) -> List[Path]:
    """Calcula y escribe el hiper-conectoma de cada sujeto.

    Con varios sujetos los workers se reparten entre sujetos; con uno solo,
    dentro del barrido de tuplas. La salida no depende de la cantidad de workers.
    """
    output = _require_path(config.output, "--output")
    subjects = _load_subjects(config)
    inner_jobs = config.workers if len(subjects) == 1 else 1
    jobs = [(subject_id, ts, config, inner_jobs) for subject_id, ts in subjects]
    results = run_ordered(_hyperconnectome_files, jobs, n_jobs=config.workers)

    written = []
    for files in results:
        for name, text in files.items():
            written.append(write_text_atomic(output / name, text))
    _write_run_config(output, config)
    logger.info(f"💾 {len(subjects)} hiper-conectomas escritos en {output}")
    return written


def _feature_kinds(selection: str) -> List[str]:
    return ["graph", "hypergraph"] if selection == "both" else [selection]


def cmd_classify(config: RunConfig) -> ExperimentReport:
    """Corre el protocolo grafo vs hipergrafo y escribe el reporte JSON."""
    source = _require_path(config.input, "--input")
    if not (source / MANIFEST_NAME).is_file():
        raise FileNotFoundError(f"{source} no contiene {MANIFEST_NAME}")

    report = run_classification(
        str(source),
        feature_kinds=_feature_kinds(config.features),
        estimator_config=config.estimator_config(),
        svm_config=config.svm_config(),
        trials=config.trials,
        fraction=config.fraction,
        seed=config.seed,
        welch=config.welch,
        positive_label=config.positive_label,
        roi_range=config.roi,
        samples_cap=config.samples,
        transpose=config.transpose,
        workers=config.workers,
        config_echo=config.echo(),
    )
    document = report.model_dump_json(indent=2) + "\n"
    if config.output:
        write_text_atomic(Path(config.output), document)
        logger.info(f"💾 Reporte escrito en {config.output}")
    else:
        print(document, end="")
    return report


def read_report(path: Path | str) -> ExperimentReport:
    """Lee un documento de `classify`.

    Raises:
        ParseError: Si el documento no es un reporte válido.
    """
    source = Path(path)
    try:
        return ExperimentReport.model_validate_json(source.read_text(encoding="utf-8"))
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(p) for p in first.get("loc", ())) or "<documento>"
        raise ParseError(f"Reporte inválido: {first['msg']}", location=f"{source}:{location}") from exc


def render_report(report: ExperimentReport) -> str:
    """Tabla alineada: Features | Training Accuracy | Testing Accuracy | F1 Score."""
    header = ("Features", "Training Accuracy", "Testing Accuracy", "F1 Score")
    rows = [
        (
            kind,
            f"{report.means[kind].train_accuracy * 100:.1f}%",
            f"{report.means[kind].test_accuracy * 100:.1f}%",
            f"{report.means[kind].f1:.2f}",
        )
        for kind in ("graph", "hypergraph")
        if kind in report.means
    ]
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in [header, *rows]]
    lines.insert(1, "  ".join("-" * width for width in widths))

    trials = len(next(iter(report.trials.values()), []))
    lines.append("")
    lines.append(f"Trials: {trials}   Clase positiva: {report.positive_label}")
    if report.t_statistic is not None and report.p_value is not None:
        kind = "Welch" if report.welch else "varianza combinada"
        lines.append(f"t = {report.t_statistic:.4f}   p-value = {report.p_value:.5g}   ({kind})")
    return "\n".join(lines) + "\n"


def cmd_report(config: RunConfig) -> str:
    """Imprime un reporte de `classify` como tabla."""
    text = render_report(read_report(_require_path(config.input, "--input")))
    print(text, end="")
    return text


COMMANDS: Dict[str, Callable[[RunConfig], object]] = {
    "simulate": cmd_simulate,
    "connectome": cmd_connectome,
    "hyperconnectome": cmd_hyperconnectome,
    "classify": cmd_classify,
    "report": cmd_report,
}


# ===== Parser =====


def _add_ingest_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", "-i", required=True, help="CSV de un sujeto o directorio de cohorte")
    parser.add_argument("--roi", help="Rango 1-based inclusivo A:B de ROIs")
    parser.add_argument("--samples", type=int, help="Tope de muestras por serie (default 20)")
    parser.add_argument("--transpose", action="store_true", help="El CSV tiene filas = muestras")


def _add_estimator_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=float, help="Radio de la bola-ε (default 1e-5)")
    parser.add_argument("--order", "-d", type=int, help="Orden de las hiperaristas (default 3)")
    parser.add_argument("--variant", choices=[v.value for v in EstimatorVariant])
    parser.add_argument("--log-base", choices=["nat", "bit"])
    parser.add_argument("--exclude-degenerate", action="store_true", help="Omitir tuplas con índices repetidos")


def build_parser() -> CliArgumentParser:
    """Parser con flags globales y un subcomando por operación."""
    parser = CliArgumentParser(prog="hyperconnectome", description="Hiper-conectomas por correlación total")
    parser.add_argument("--config", help="Archivo dotenv con defaults HYPERCONN_*")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="Nivel de logging (default INFO)")
    parser.add_argument("--workers", type=int, help="Workers del pool (default 1)")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    simulate = commands.add_parser("simulate", help="Genera una cohorte sintética")
    simulate.add_argument("--output", "-o", required=True)
    simulate.add_argument("--cohort", choices=["parity", "clinical"])
    simulate.add_argument("--subjects-x", type=int, help="Sujetos X (paridad) o controles (clínica)")
    simulate.add_argument("--subjects-y", type=int, help="Sujetos Y (paridad) o casos (clínica)")
    simulate.add_argument("--samples", type=int)
    simulate.add_argument("--rois", type=int, help="ROIs de la cohorte clínica (default 61)")
    simulate.add_argument("--seed", type=int)

    conn = commands.add_parser("connectome", help="Matriz de Pearson por sujeto")
    _add_ingest_flags(conn)
    conn.add_argument("--output", "-o", required=True)

    hyper = commands.add_parser("hyperconnectome", help="Tensor de correlación total por sujeto")
    _add_ingest_flags(hyper)
    _add_estimator_flags(hyper)
    hyper.add_argument("--output", "-o", required=True)
    hyper.add_argument("--reduce", action="store_true", help="Exporta además la matriz de pares")
    hyper.add_argument("--edges", action="store_true", help="Exporta además las hiperaristas significativas")
    hyper.add_argument("--threshold", type=float, help="Umbral de peso de --edges (default 256)")

    classify = commands.add_parser("classify", help="SVM lineal grafo vs hipergrafo")
    _add_ingest_flags(classify)
    _add_estimator_flags(classify)
    classify.add_argument("--output", "-o", help="Archivo del reporte (default stdout)")
    classify.add_argument("--features", choices=["graph", "hypergraph", "both"])
    classify.add_argument("--trials", type=int)
    classify.add_argument("--fraction", type=float)
    classify.add_argument("--seed", type=int)
    classify.add_argument("--welch", action="store_true")
    classify.add_argument("--positive-label")
    classify.add_argument("--svm-epochs", type=int)
    classify.add_argument("--svm-lambda", type=float)

    report = commands.add_parser("report", help="Imprime un reporte de classify como tabla")
    report.add_argument("--input", "-i", required=True)

    return parser
