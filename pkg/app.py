"""
Command-line entry point for the Seifert quotient toolkit.
Run `python app.py <verb> --help` for the arguments of each verb.
"""

import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import LOG_FORMAT, LOG_LEVEL
from cli.commands import main


def configure_logging(level: str = LOG_LEVEL):
    """Root logger on stderr so that stdout stays clean for --json output."""
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING),
                        format=LOG_FORMAT, stream=sys.stderr)


if __name__ == "__main__":
    configure_logging()
    sys.exit(main())
