"""Punto de entrada de la CLI `hyperconnectome`.

Códigos de salida: 0 éxito, 1 violación de contrato en entradas o parámetros,
2 fallo de I/O o de parseo.
"""

from __future__ import annotations

import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.config.settings import load_settings
from app.controller.cli.routes import COMMANDS, build_parser, resolve_run_config
from app.core.errors import HyperConnectomeError

logger = logging.getLogger(__name__)


def configure_logging(level: Optional[str]) -> None:
    """Configura el logging raíz sobre stderr."""
    logging.basicConfig(
        level=(level or "INFO").upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parsea argumentos, ejecuta el comando y devuelve el código de salida."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        defaults = load_settings(args.config)
    except (OSError, ValidationError) as exc:
        configure_logging(args.log_level)
        logger.error(f"Configuración inválida: {exc}", exc_info=True)
        return 2 if isinstance(exc, OSError) else 1

    configure_logging(args.log_level or defaults.log_level)

    try:
        config = resolve_run_config(args, defaults)
        logger.info(f"🚀 Ejecutando {config.command}")
        COMMANDS[config.command](config)
    except ValidationError as exc:
        logger.error(f"Parámetros inválidos: {exc}", exc_info=True)
        return 1
    except HyperConnectomeError as exc:
        logger.error(f"{type(exc).__name__}: {exc.message}", exc_info=True)
        return exc.exit_code
    except OSError as exc:
        logger.error(f"Error de I/O: {exc}", exc_info=True)
        return 2

    logger.info(f"✅ {config.command} completado")
    return 0


if __name__ == "__main__":
    sys.exit(main())
