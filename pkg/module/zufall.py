"""Reproduzierbare Zufallsströme.

Alle Ziehungen laufen über ``numpy.random.Philox`` (zählerbasiert, 64 Bit),
damit Tabellen plattformübergreifend identisch bleiben. Ein Versuch ``t`` einer
Studie erhält den Seed ``master_seed XOR hash(t)``; der Hash ist SHA-256 über
eine feste Textdarstellung.
"""

from __future__ import annotations

import hashlib

import numpy as np

__all__ = ["derive_seed", "make_rng", "SEED_MASK"]

SEED_MASK = (1 << 64) - 1


def _build_digest(*teile: object) -> int:
    """Bildet einen stabilen 64-Bit-Hash aus beliebigen Textbausteinen."""

    text = "|".join(str(teil) for teil in teile)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def derive_seed(master_seed: int, trial: int, *scope: object) -> int:
    """Leitet den Seed eines Versuchs aus dem Master-Seed ab.

    ``scope`` trennt Ströme verschiedener Gitterzellen (z. B. ``(s, m)``), so
    dass Versuch 0 in Zelle A nicht denselben Strom wie in Zelle B nutzt.
    """

    return (int(master_seed) ^ _build_digest("trial", trial, *scope)) & SEED_MASK


def make_rng(seed: int | None) -> np.random.Generator:
    """Erzeugt einen Philox-Generator; ``None`` liefert einen Seed aus dem OS."""

    if seed is None:
        return np.random.Generator(np.random.Philox())
    return np.random.Generator(np.random.Philox(int(seed) & SEED_MASK))
