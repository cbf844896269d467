"""Entrypoint for the vnlab command line."""

from __future__ import annotations

import logging
import sys

from dotenv import load_dotenv

from src.cli import dispatch

logging.basicConfig(level=logging.INFO, format="[%(levelname)s] %(name)s - %(message)s")
LOGGER = logging.getLogger("vnlab")


def main() -> int:
    load_dotenv()
    return dispatch()


if __name__ == "__main__":
    sys.exit(main())
