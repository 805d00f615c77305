"""Zentrale Logging-Konfiguration für CLI und Streamlit-Oberfläche."""

from __future__ import annotations

import logging

__all__ = ["configure_logging", "LOG_FORMAT"]

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Für Debugging kann das Level beim Aufruf auf "DEBUG" gesetzt werden; dann
# erscheinen auch die Fortschrittsmeldungen der Aufzählungen.
_DEFAULT_LEVEL = "WARNING"
_PACKAGE_LOGGERS = ("module", "experimentmodul")


def configure_logging(level: str | int | None = None) -> logging.Logger:
    """Richtet genau einen Stream-Handler für das Paket ein.

    Mehrfache Aufrufe (Streamlit führt Skripte bei jeder Interaktion neu aus)
    fügen keinen weiteren Handler hinzu, sondern passen nur das Level an.
    """

    if level is None:
        level = _DEFAULT_LEVEL
    if isinstance(level, str):
        resolved = logging.getLevelName(level.strip().upper())
        if not isinstance(resolved, int):
            resolved = logging.WARNING
    else:
        resolved = int(level)

    for name in _PACKAGE_LOGGERS:
        package_logger = logging.getLogger(name)
        if not any(getattr(h, "_orbit_sensing", False) for h in package_logger.handlers):
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            handler._orbit_sensing = True  # type: ignore[attr-defined]
            package_logger.addHandler(handler)
        package_logger.setLevel(resolved)
    return logging.getLogger(_PACKAGE_LOGGERS[0])
