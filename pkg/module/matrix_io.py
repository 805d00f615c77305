"""Textformat für komplexe Matrizen und Vektoren.

Eine Matrix beginnt mit der Kopfzeile ``n m`` (Zeilen, Spalten), danach
folgen n Zeilen mit je m Paaren ``re im``. Eine Datei darf mehrere Matrizen
hintereinander enthalten (z. B. eine pro Gruppenelement). Zeilen, die mit
``#`` beginnen, und Leerzeilen werden übersprungen. Vektoren sind Matrizen
der Form ``n 1``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, List, Union

import numpy as np

from module.fehler import ConfigurationError

__all__ = [
    "read_matrix_stack",
    "read_complex_matrix",
    "read_complex_vector",
    "write_matrix_stack",
    "write_complex_matrix",
    "write_complex_vector",
    "format_matrix",
    "store_uploaded_matrix",
]

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parse_stack(text: str, source: str) -> List[np.ndarray]:
    lines = list(_content_lines(text))
    matrices: List[np.ndarray] = []
    cursor = 0
    while cursor < len(lines):
        number, header = lines[cursor]
        parts = header.split()
        try:
            rows, cols = (int(v) for v in parts)
        except ValueError as exc:
            raise ConfigurationError(
                f"{source}:{number}: Kopfzeile 'n m' erwartet, gefunden: '{header}'"
            ) from exc
        if rows < 1 or cols < 1:
            raise ConfigurationError(f"{source}:{number}: Dimensionen müssen positiv sein")
        if cursor + rows >= len(lines):
            raise ConfigurationError(f"{source}:{number}: Matrix endet vorzeitig")
        matrix = np.empty((rows, cols), dtype=complex)
        for r in range(rows):
            line_number, line = lines[cursor + 1 + r]
            try:
                values = [float(v) for v in line.split()]
            except ValueError as exc:
                raise ConfigurationError(f"{source}:{line_number}: keine Zahl in '{line}'") from exc
            if len(values) != 2 * cols:
                raise ConfigurationError(
                    f"{source}:{line_number}: {2 * cols} Werte (re im) erwartet, gefunden {len(values)}"
                )
            matrix[r] = np.asarray(values[0::2]) + 1j * np.asarray(values[1::2])
        matrices.append(matrix)
        cursor += rows + 1
    if not matrices:
        raise ConfigurationError(f"{source}: keine Matrix gefunden")
    return matrices


def read_matrix_stack(path: PathLike) -> List[np.ndarray]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"Matrixdatei '{path}' nicht lesbar: {exc}") from exc
    return _parse_stack(text, str(path))


def read_complex_matrix(path: PathLike) -> np.ndarray:
    matrices = read_matrix_stack(path)
    if len(matrices) != 1:
        raise ConfigurationError(f"'{path}' enthält {len(matrices)} Matrizen, erwartet genau eine")
    return matrices[0]


def read_complex_vector(path: PathLike) -> np.ndarray:
    matrix = read_complex_matrix(path)
    if matrix.shape[1] != 1:
        raise ConfigurationError(f"'{path}' ist kein Vektor (Form {matrix.shape})")
    return matrix[:, 0]


def format_matrix(matrix: np.ndarray) -> str:
    matrix = np.atleast_2d(np.asarray(matrix, dtype=complex))
    lines = [f"{matrix.shape[0]} {matrix.shape[1]}"]
    for row in matrix:
        lines.append(" ".join(f"{float(v.real)!r} {float(v.imag)!r}" for v in row))
    return "\n".join(lines) + "\n"


def write_matrix_stack(path: PathLike, matrices: Iterable[np.ndarray]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = "".join(format_matrix(m) for m in matrices)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return path


def write_complex_matrix(path: PathLike, matrix: np.ndarray) -> Path:
    return write_matrix_stack(path, [matrix])


def write_complex_vector(path: PathLike, vector: np.ndarray) -> Path:
    return write_matrix_stack(path, [np.asarray(vector, dtype=complex).reshape(-1, 1)])


def store_uploaded_matrix(data: bytes, directory: PathLike, name: str = "basiswechsel.txt") -> Path:
    """Prüft eine hochgeladene Einzelmatrix und legt sie als Datei in ``directory`` ab."""

    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ConfigurationError(f"Hochgeladene Matrix '{name}' ist kein UTF-8-Text") from exc
    matrices = _parse_stack(text, name)
    if len(matrices) != 1:
        raise ConfigurationError(f"'{name}' enthält {len(matrices)} Matrizen, erwartet genau eine")
    return write_complex_matrix(Path(directory) / Path(name).name, matrices[0])
