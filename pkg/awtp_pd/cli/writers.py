"""Result writers: versioned CSV through pandas, or JSON."""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from ..utils.errors import ConfigurationError
from .models import OutputFormat

CSV_HEADER = "# awtp-pd v1"


def render_table(records: List[Dict[str, Any]], fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return json.dumps(records, indent=2) + "\n"
    frame = pd.DataFrame(records)
    return CSV_HEADER + "\n" + frame.to_csv(index=False, lineterminator="\n")


def write_table(records: List[Dict[str, Any]], path: Optional[str], fmt: OutputFormat):
    """Write records to ``path``, or to standard output when no path is given."""
    text = render_table(records, fmt)
    if not path:
        sys.stdout.write(text)
        return
    target = Path(path)
    if target.parent and not target.parent.exists():
        raise ConfigurationError(f"Output directory does not exist: {target.parent}")
    target.write_text(text)


def read_csv_table(path: str) -> pd.DataFrame:
    """Read a results CSV back, checking the version header."""
    with open(path) as handle:
        first = handle.readline().rstrip("\n")
        if first != CSV_HEADER:
            raise ConfigurationError(f"Unexpected results header {first!r}, expected {CSV_HEADER!r}")
        return pd.read_csv(handle)
