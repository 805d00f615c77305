"""Klassische DFT, nicht-abelsche Fouriertransformation und Faltung auf Gruppen.

Konvention der klassischen DFT (1-basiert, positives Vorzeichen):

    (Fx)_l = Σ_{j=1}^{n} x_j e^{2πijl/n},     l = 1 … n

Das Array-Element ``x[i]`` ist die Koordinate ``j = i + 1``. Die unitäre
Matrix ``DFTⁿ`` hat die Einträge ``e^{2πijk/n}/√n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence, Tuple

import numpy as np

from module.fehler import ConfigurationError, RepresentationError

if TYPE_CHECKING:  # pragma: no cover
    from module.darstellungen import Representation
    from module.gruppen import FiniteGroup

__all__ = [
    "FourierCoefficients",
    "dft_matrix",
    "cyclic_fourier_matrix",
    "classical_dft",
    "classical_idft",
    "circular_convolve",
    "delta_train",
    "group_fourier",
    "group_inverse_fourier",
    "plancherel_inner",
    "group_convolve",
]


def dft_matrix(n: int) -> np.ndarray:
    """Unitäre ``DFTⁿ`` mit 1-basierten Indizes."""

    j = np.arange(1, n + 1)
    return np.exp(2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)


def cyclic_fourier_matrix(G: "FiniteGroup") -> np.ndarray:
    """F/√n mit Spalten in Elementreihenfolge von ``Z/n`` (Zeile l ↔ l = 1 … n).

    Konjugation der linksregulären Darstellung damit ergibt
    diag(e^{2πikl/n}).
    """

    n = G.order
    elements = np.arange(n)
    l = np.arange(1, n + 1)
    return np.exp(2j * np.pi * np.outer(l, elements) / n) / np.sqrt(n)


def classical_dft(x: np.ndarray) -> np.ndarray:
    """Unnormierte Vorwärts-DFT mit 1-basiertem Exponenten."""

    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    i = np.arange(n)
    # Σ_i x_i e^{2πi(i+1)(k+1)/n} = e^{2πi(k+1)/n} · n·ifft(x_i e^{2πi i/n})_k
    shifted = np.fft.ifft(x * np.exp(2j * np.pi * i / n)) * n
    return shifted * np.exp(2j * np.pi * (i + 1) / n)


def classical_idft(X: np.ndarray) -> np.ndarray:
    """Inverse zu :func:`classical_dft` (Faktor 1/n, negatives Vorzeichen)."""

    X = np.asarray(X, dtype=complex)
    n = X.shape[-1]
    i = np.arange(n)
    shifted = np.fft.fft(X * np.exp(-2j * np.pi * i / n)) / n
    return shifted * np.exp(-2j * np.pi * (i + 1) / n)


def circular_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(a⊛b)_k = Σ_j a_j b_{k-j}, Indizes 1-basiert modulo n (0 ↦ n)."""

    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    n = a.shape[0]
    k = np.arange(n)
    # Array-Index von Position (k+1)-(j+1) mod n ist (k - j - 1) mod n
    index = (k[:, None] - k[None, :] - 1) % n
    return (b[index] * a[None, :]).sum(axis=1)


def delta_train(n: int, s: int) -> np.ndarray:
    """v_j = 1 genau für j ≡ 1 mod n/s (j = 1 … n)."""

    if n < 1 or s < 1 or n % s:
        raise ConfigurationError(f"delta_train braucht s | n, erhalten n={n}, s={s}")
    v = np.zeros(n, dtype=complex)
    v[:: n // s] = 1.0
    return v


@dataclass(frozen=True)
class FourierCoefficients:
    """f̂(π) pro Katalogeintrag, in Katalogreihenfolge."""

    catalog: Tuple["Representation", ...]
    coefficients: Tuple[np.ndarray, ...]

    def __getitem__(self, index: int) -> np.ndarray:
        return self.coefficients[index]


def _require_complete(catalog: Sequence["Representation"]) -> None:
    if not catalog:
        raise RepresentationError("Leerer Katalog")
    order = catalog[0].group.order
    total = sum(rep.degree**2 for rep in catalog)
    if total != order:
        raise RepresentationError(f"Unvollständiger Katalog: Σd² = {total} ≠ |G| = {order}")


def group_fourier(f: np.ndarray, catalog: Sequence["Representation"]) -> FourierCoefficients:
    """f̂(π) = Σ_g f(g)·π(g)."""

    _require_complete(catalog)
    f = np.asarray(f, dtype=complex)
    coefficients = tuple(np.einsum("g,gij->ij", f, rep.matrices) for rep in catalog)
    return FourierCoefficients(tuple(catalog), coefficients)


def group_inverse_fourier(A: FourierCoefficients) -> np.ndarray:
    """f(g) = (1/|G|) Σ_π d_π tr(f̂(π)·π(g⁻¹))."""

    _require_complete(A.catalog)
    G = A.catalog[0].group
    f = np.zeros(G.order, dtype=complex)
    for rep, coeff in zip(A.catalog, A.coefficients):
        inverse_mats = rep.matrices[G.inverse]
        f += rep.degree * np.einsum("ij,gji->g", coeff, inverse_mats)
    return f / G.order


def plancherel_inner(A: FourierCoefficients, B: FourierCoefficients) -> complex:
    """(1/|G|) Σ_π d_π tr(f̂(π)·ĥ(π)*), entspricht ⟨f, h⟩ = Σ f·conj(h)."""

    order = A.catalog[0].group.order
    total = sum(
        rep.degree * np.trace(a @ b.conj().T)
        for rep, a, b in zip(A.catalog, A.coefficients, B.coefficients)
    )
    return complex(total / order)


def group_convolve(x: np.ndarray, y: np.ndarray, G: "FiniteGroup") -> np.ndarray:
    """(x∗y)(g) = Σ_h x(h)·y(g⁻¹h), direkt in O(|G|²)."""

    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != (G.order,) or y.shape != (G.order,):
        raise RepresentationError("Faltung braucht zwei Vektoren der Länge |G|")
    shifted = y[G.cayley[G.inverse]]
    return shifted @ x
