"""Superficie de línea de comandos."""

from app.controller.cli.routes import COMMANDS, build_parser, resolve_run_config
from app.controller.cli.schemas import RunConfig

__all__ = ["COMMANDS", "RunConfig", "build_parser", "resolve_run_config"]
