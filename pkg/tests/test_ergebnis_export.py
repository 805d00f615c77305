from datetime import datetime
from io import BytesIO

import numpy as np
import pandas as pd
import pytest

from module.ergebnis_export import build_excel_export, render_csv, write_csv
from module.fehler import ConfigurationError


@pytest.fixture
def frame():
    return pd.DataFrame({"s": [1, 2], "delta_s": [1 / 3, 0.25], "ok": [True, False]})


def test_render_csv_format(frame):
    text = render_csv(frame)
    assert text == "s,delta_s,ok\n1,0.333333333333,True\n2,0.25,False\n"
    assert "\r" not in text


def test_render_csv_timestamp_line(frame):
    text = render_csv(frame, timestamp=True, now=datetime(2024, 5, 1, 12, 30, 5))
    first, rest = text.split("\n", 1)
    assert first == "# erzeugt: 2024-05-01T12:30:05"
    assert rest == render_csv(frame)


def test_write_csv_is_byte_identical(tmp_path, frame):
    a = write_csv(frame, tmp_path / "a" / "x.csv")
    b = write_csv(frame.copy(), tmp_path / "b" / "x.csv")
    assert a.read_bytes() == b.read_bytes()


def test_write_csv_reports_unwritable_target(tmp_path, frame):
    blocker = tmp_path / "datei"
    blocker.write_text("", encoding="utf-8")
    with pytest.raises(ConfigurationError, match="nicht schreibbar"):
        write_csv(frame, blocker / "x.csv")


def test_excel_export_handles_complex_columns(frame):
    frame = frame.assign(z=np.array([1 + 1j, 2j]))
    data, filename = build_excel_export(frame, "rip")
    assert filename.startswith("rip_") and filename.endswith(".xlsx")
    back = pd.read_excel(BytesIO(data), engine="openpyxl")
    assert list(back.columns) == ["s", "delta_s", "ok", "z"]
    assert all(isinstance(v, str) for v in back["z"])
    assert complex(back["z"][0]) == 1 + 1j
