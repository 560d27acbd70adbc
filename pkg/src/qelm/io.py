"""Byte-stable CSV and JSON writers."""

from __future__ import annotations

import csv
import json
import math
import platform
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy


def format_value(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        f = float(v)
        if math.isnan(f):
            return "nan"
        if math.isinf(f):
            return "inf" if f > 0 else "-inf"
        return format(f, ".17g")
    if v is None:
        return ""
    return str(v)


def write_csv(path, rows: Iterable[Mapping], columns: Sequence[str]) -> None:
    """Write ``rows`` with ``'.'`` decimals and 17 significant digits."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([format_value(r.get(c, "")) for c in columns])


def read_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def versions() -> dict:
    from . import __version__

    return {
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "qelm": __version__,
    }


def write_manifest(path, command: str, config: dict, seed: int, wall_time: float) -> None:
    doc = {
        "command": command,
        "config": config,
        "seed": seed,
        "versions": versions(),
        "wall_time": wall_time,
    }
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
