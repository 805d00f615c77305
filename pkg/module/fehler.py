"""Gemeinsame Fehlerklassen für Gruppen, Darstellungen und Experimente.

Alle Ausnahmen erben von :class:`OrbitSensingError`, damit Aufrufer (CLI,
Streamlit-Seiten) sie gesammelt abfangen und einem Exit-Code zuordnen können.
Fehler, die eine ungültige Eingabe beschreiben, erben zusätzlich von
``ValueError``.
"""

from __future__ import annotations

__all__ = [
    "OrbitSensingError",
    "GroupConstructionError",
    "SubgroupError",
    "RepresentationError",
    "SamplingError",
    "RecoveryError",
    "InvariantViolation",
    "ConfigurationError",
    "BudgetExceededError",
]


class OrbitSensingError(RuntimeError):
    """Basisklasse für alle fachlichen Fehler des Pakets."""


class GroupConstructionError(OrbitSensingError, ValueError):
    """Gruppe konnte aus ``kind``/``param`` nicht gebaut werden."""


class SubgroupError(OrbitSensingError, ValueError):
    """Die übergebene Teilmenge ist keine Untergruppe."""

    def __init__(self, axiom: str, detail: str) -> None:
        super().__init__(f"Keine Untergruppe ({axiom}): {detail}")
        self.axiom = axiom


class RepresentationError(OrbitSensingError, ValueError):
    """Darstellung, Basiswechsel oder Katalog ist ungültig."""


class SamplingError(OrbitSensingError, ValueError):
    """Erzeugender Vektor oder Stichprobenmenge kann nicht gezogen werden."""


class RecoveryError(OrbitSensingError, ValueError):
    """Das Rekonstruktionsproblem ist nicht lösbar (z. B. unzulässiges y)."""


class InvariantViolation(OrbitSensingError):
    """Eine Verifikationsprüfung ist fehlgeschlagen.

    ``check`` enthält den Namen der Prüfung, damit die CLI ihn ausgeben kann.
    """

    def __init__(self, check: str, detail: str) -> None:
        super().__init__(f"Prüfung '{check}' fehlgeschlagen: {detail}")
        self.check = check
        self.detail = detail


class ConfigurationError(OrbitSensingError, ValueError):
    """Konfiguration unvollständig, fehlerhaft oder nicht auflösbar."""


class BudgetExceededError(OrbitSensingError):
    """Eine Aufzählung würde das Rechenbudget überschreiten."""
