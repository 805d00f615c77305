"""Gemeinsame Ergebnisanzeige der Streamlit-Seiten (Tabelle plus Downloads)."""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

import pandas as pd
import streamlit as st

from module.ergebnis_export import build_excel_export, render_csv
from module.fehler import BudgetExceededError, InvariantViolation, OrbitSensingError

__all__ = ["zeige_ergebnis", "fehler_als_hinweis"]


def zeige_ergebnis(df: pd.DataFrame, prefix: str) -> None:
    """Zeigt die Tabelle und bietet CSV- und Excel-Download an."""

    if df.empty:
        st.info("Keine Zeilen erzeugt.")
        return
    st.dataframe(df, use_container_width=True)

    csv_col, excel_col = st.columns(2)
    csv_col.download_button(
        "CSV herunterladen",
        data=render_csv(df, timestamp=False).encode("utf-8"),
        file_name=f"{prefix}.csv",
        mime="text/csv",
        key=f"{prefix}_csv",
    )
    try:
        export_bytes, export_filename = build_excel_export(df, prefix)
    except (ValueError, ImportError) as exc:  # pragma: no cover
        excel_col.error(f"Excel-Export nicht möglich: {exc}")
        return
    excel_col.download_button(
        "Excel herunterladen",
        data=export_bytes,
        file_name=export_filename,
        mime="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
        key=f"{prefix}_xlsx",
    )


@contextmanager
def fehler_als_hinweis() -> Iterator[None]:
    """Zeigt fachliche Fehler als Meldung statt als Stacktrace."""

    try:
        yield
    except InvariantViolation as exc:
        st.error(f"❌ Invariante verletzt: {exc.check}: {exc.detail}")
    except BudgetExceededError as exc:
        st.warning(f"⏱️ Budget überschritten: {exc}")
    except (OrbitSensingError, ValueError) as exc:
        st.error(f"⚠️ Konfigurationsfehler: {exc}")
