"""Presentation layer: the argparse CLI and the Textual explorer."""

from .cli import build_parser, main

__all__ = ["build_parser", "main"]
