"""Command-line interface."""

from .runner import cli, cli_main, main

__all__ = ["cli", "cli_main", "main"]
