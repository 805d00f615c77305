"""CSV- und Excel-Export der Ergebnistabellen."""

from __future__ import annotations

import logging
from datetime import datetime
from io import BytesIO, StringIO
from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from module.fehler import ConfigurationError

__all__ = ["FLOAT_FORMAT", "render_csv", "write_csv", "build_excel_export"]

logger = logging.getLogger(__name__)

# Gleitkommaformat der CSV-Ausgabe; gleiche Eingaben ergeben gleiche Bytes.
FLOAT_FORMAT = "%.12g"
TIMESTAMP_PREFIX = "# erzeugt: "


def render_csv(df: pd.DataFrame, timestamp: bool = False, now: Optional[datetime] = None) -> str:
    """CSV-Text mit optionaler Zeitstempelzeile."""

    buffer = StringIO()
    if timestamp:
        moment = now or datetime.now()
        buffer.write(f"{TIMESTAMP_PREFIX}{moment.isoformat(timespec='seconds')}\n")
    df.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def write_csv(df: pd.DataFrame, path: str | Path, timestamp: bool = False) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(render_csv(df, timestamp))
    except OSError as exc:
        raise ConfigurationError(f"Ausgabe '{path}' nicht schreibbar: {exc}") from exc
    logger.info("%d Zeilen nach %s geschrieben", len(df), path)
    return path


def build_excel_export(df: pd.DataFrame, prefix: str = "orbit_sensing") -> Tuple[bytes, str]:
    """Excel-Datei als Bytes und ein Dateiname mit Zeitstempel.

    Komplexe Spalten werden als Text abgelegt, da openpyxl sie nicht kennt.
    """

    frame = df.copy()
    for column in frame.columns:
        if frame[column].dtype.kind == "c":
            frame[column] = frame[column].astype(str)
    if frame.empty and not len(frame.columns):
        frame = pd.DataFrame(columns=["hinweis"])

    buffer = BytesIO()
    frame.to_excel(buffer, index=False, engine="openpyxl")
    buffer.seek(0)

    filename = f"{prefix}_{datetime.now():%Y%m%d_%H%M%S}.xlsx"
    return buffer.getvalue(), filename
