"""Zentrale Paketmarkierung für die Module von Orbit-Sensing."""

# Hinweis: Die Datei verhindert, dass Python das Verzeichnis als
# Namespace-Paket mit gleichnamigen Drittanbieter-Paketen zusammenführt.
# Untermodule wie ``module.gruppen`` bleiben dadurch zuverlässig importierbar.

__all__: list[str] = []
