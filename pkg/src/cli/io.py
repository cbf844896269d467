"""Report emission: JSON documents and CSV tables, to a file or stdout."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, TextIO

import pandas as pd

LOGGER = logging.getLogger(__name__)


def dump_json(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, default=str)


def write_json(payload: Any, path: Optional[Path] = None, stream: TextIO | None = None) -> None:
    text = dump_json(payload)
    if path is None:
        (stream or sys.stdout).write(text + "\n")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    LOGGER.info("Saved report to %s", path)


def write_frame(frame: pd.DataFrame, path: Optional[Path] = None, stream: TextIO | None = None) -> None:
    if path is None:
        frame.to_csv(stream or sys.stdout, index=False, lineterminator="\n")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, lineterminator="\n")
    LOGGER.info("Saved %s row(s) to %s", len(frame), path)
