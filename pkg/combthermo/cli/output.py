from pathlib import Path
from typing import Optional

import click
import pandas as pd

from combthermo.const import FLOAT_FORMAT, JSON_DOUBLE_PRECISION


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return frame.to_json(orient="records", double_precision=JSON_DOUBLE_PRECISION)
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_frame(frame: pd.DataFrame, out: Optional[str], fmt: str) -> None:
    """Write to `out`, or to stdout when no path is given."""
    text = render_frame(frame, fmt)
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
