"""argparse front end for the observatory."""

from .main import build_parser, configure_logging, main, run

__all__ = ["build_parser", "configure_logging", "main", "run"]
