"""Command-line interface."""

from .main import build_parser, main
from .parse import CurveSpec, parse_f, print_f

__all__ = ["CurveSpec", "build_parser", "main", "parse_f", "print_f"]
