"""Erzeugende Vektoren, Stichprobenmengen und die Messmatrix.

Die Messmatrix lautet

    Φ = (1/√m) · R_Ω · (π(g)ξ)*_{g∈G} · B,

d. h. Zeile r ist ``conj(π(ω_r)ξ)ᵀ·B/√m``. Alle Zufallsgrößen werden aus
einem Seed über :func:`module.zufall.make_rng` gezogen und sind damit
bitgenau reproduzierbar.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from module.darstellungen import BlockStructure, Representation, is_unitary
from module.fehler import RepresentationError, SamplingError
from module.fourier import dft_matrix
from module.gruppen import CosetPartition, FiniteGroup
from module.zufall import make_rng

__all__ = [
    "SCHEME_GAUSSIAN",
    "SCHEME_RADEMACHER",
    "SCHEME_STEINHAUS",
    "SCHEME_STRUCTURED",
    "OMEGA_FIXED",
    "OMEGA_IID",
    "OMEGA_COSET",
    "XI_SCHEMES",
    "OMEGA_MODES",
    "GeneratingVector",
    "SamplingSet",
    "MeasurementEnsemble",
    "sample_generating_vector",
    "structured_vector",
    "sample_omega",
    "resolve_basis",
    "orbit_matrix",
    "build_measurement",
    "equivalent_generating_vector",
    "plant_sparse_signal",
]

logger = logging.getLogger(__name__)

SCHEME_GAUSSIAN = "complex_gaussian"
SCHEME_RADEMACHER = "rademacher"
SCHEME_STEINHAUS = "steinhaus"
SCHEME_STRUCTURED = "structured_block"
XI_SCHEMES = (SCHEME_GAUSSIAN, SCHEME_RADEMACHER, SCHEME_STEINHAUS, SCHEME_STRUCTURED)

OMEGA_FIXED = "fixed_set"
OMEGA_IID = "uniform_iid"
OMEGA_COSET = "coset_admissible"
OMEGA_MODES = (OMEGA_FIXED, OMEGA_IID, OMEGA_COSET)


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    values: np.ndarray
    scheme: str
    seed: Optional[int]
    block: Optional[BlockStructure] = None

    @property
    def n(self) -> int:
        return int(self.values.shape[0])


@dataclass(frozen=True)
class SamplingSet:
    """Geordnete Multimenge von Elementindizes."""

    indices: Tuple[int, ...]
    mode: str
    seed: Optional[int] = None

    @property
    def m(self) -> int:
        return len(self.indices)


@dataclass(frozen=True, eq=False)
class MeasurementEnsemble:
    phi: np.ndarray
    rep: Representation
    xi: GeneratingVector
    omega: SamplingSet
    basis: np.ndarray
    normalized: bool = True
    basis_name: str = "identity"

    @property
    def shape(self) -> Tuple[int, int]:
        return self.phi.shape  # type: ignore[return-value]


def _unimodular(rng: np.random.Generator, size: int) -> np.ndarray:
    return np.exp(2j * np.pi * rng.random(size))


def structured_vector(block: BlockStructure, epsilon: np.ndarray) -> np.ndarray:
    """Strukturierter Vektor aus unimodularen ε_{τ,ι} (in β-Reihenfolge).

    Im Block (τ,κ) gilt für κ < m: ξ^{τ,κ} = √d·ε_{τ,κ}·e_κ, für κ = m:
    ξ^{τ,m} = √(d/(d-m+1))·Σ_{ι=m}^{d} ε_{τ,ι}·e_ι. Braucht m ≤ d je Block.
    """

    xi = np.zeros(block.n, dtype=complex)
    cursor = 0
    for offset, entry in zip(block.offsets, block.blocks):
        d, m = entry.degree, entry.multiplicity
        if m > d:
            raise SamplingError(
                f"Strukturierter Vektor braucht m ≤ d, Block '{entry.irrep_id}' hat m={m} > d={d}"
            )
        for iota in range(1, d + 1):
            eps = epsilon[cursor]
            cursor += 1
            if iota < m:
                xi[offset + (iota - 1) * d + iota - 1] = np.sqrt(d) * eps
            else:
                xi[offset + (m - 1) * d + iota - 1] = np.sqrt(d / (d - m + 1)) * eps
    return xi


def sample_generating_vector(
    n: int,
    scheme: str,
    seed: Optional[int],
    block: Optional[BlockStructure] = None,
) -> GeneratingVector:
    """Zieht ξ nach einem der Schemata aus :data:`XI_SCHEMES`."""

    if scheme not in XI_SCHEMES:
        raise SamplingError(f"Unbekanntes ξ-Schema '{scheme}'")
    rng = make_rng(seed)
    if scheme == SCHEME_GAUSSIAN:
        real = rng.standard_normal((2, n))
        values = (real[0] + 1j * real[1]) / np.sqrt(2.0)
    elif scheme == SCHEME_RADEMACHER:
        values = (2.0 * rng.integers(0, 2, size=n) - 1.0).astype(complex)
    elif scheme == SCHEME_STEINHAUS:
        values = _unimodular(rng, n)
    else:
        if block is None:
            raise SamplingError("Schema structured_block braucht eine Blockstruktur")
        if block.n != n:
            raise SamplingError(f"Blockstruktur hat Grad {block.n}, verlangt ist n={n}")
        count = sum(b.degree for b in block.blocks)
        values = structured_vector(block, _unimodular(rng, count))
    values.setflags(write=False)
    return GeneratingVector(values, scheme, seed, block)


def sample_omega(
    G: FiniteGroup,
    m: int,
    mode: str,
    seed: Optional[int] = None,
    partition: Optional[CosetPartition] = None,
) -> SamplingSet:
    """Zieht Ω; ohne Seed liefern die mengenwertigen Modi die ersten Elemente."""

    m = int(m)
    if m < 1:
        raise SamplingError(f"m muss ≥ 1 sein: {m}")
    order = G.order

    if mode == OMEGA_IID:
        rng = make_rng(seed)
        indices = rng.integers(0, order, size=m)
        return SamplingSet(tuple(int(v) for v in indices), mode, seed)

    if mode == OMEGA_FIXED:
        if m > order:
            raise SamplingError(f"m={m} übersteigt |G|={order} für fixed_set")
        if seed is None:
            return SamplingSet(tuple(range(m)), mode, None)
        rng = make_rng(seed)
        chosen = np.sort(rng.choice(order, size=m, replace=False))
        return SamplingSet(tuple(int(v) for v in chosen), mode, seed)

    if mode == OMEGA_COSET:
        if partition is None:
            raise SamplingError("coset_admissible braucht eine Nebenklassenzerlegung")
        if m > partition.index:
            raise SamplingError(f"m={m} übersteigt die Anzahl {partition.index} der Nebenklassen")
        if seed is None:
            picked = [partition.cosets[c][0] for c in range(m)]
        else:
            rng = make_rng(seed)
            cosets = np.sort(rng.choice(partition.index, size=m, replace=False))
            picked = [
                partition.cosets[c][int(rng.integers(len(partition.cosets[c])))] for c in cosets
            ]
        return SamplingSet(tuple(sorted(int(v) for v in picked)), mode, seed)

    raise SamplingError(f"Unbekannter Ω-Modus '{mode}'")


def resolve_basis(basis: Union[str, np.ndarray, None], n: int) -> Tuple[np.ndarray, str]:
    """``identity``, ``dft`` oder eine explizite unitäre Matrix."""

    if basis is None or (isinstance(basis, str) and basis == "identity"):
        return np.eye(n, dtype=complex), "identity"
    if isinstance(basis, str):
        if basis == "dft":
            return dft_matrix(n), "dft"
        raise RepresentationError(f"Unbekannte Basis '{basis}'")
    B = np.asarray(basis, dtype=complex)
    if B.shape != (n, n):
        raise RepresentationError(f"Basis der Form {B.shape} passt nicht zu n={n}")
    if not is_unitary(B):
        raise RepresentationError("Basis B ist nicht unitär")
    return B, "matrix"


def orbit_matrix(rep: Representation, xi: np.ndarray) -> np.ndarray:
    """Spalten π(g)ξ für alle g (Form n×|G|)."""

    xi = np.asarray(xi, dtype=complex)
    if xi.shape != (rep.degree,):
        raise RepresentationError(f"ξ hat Länge {xi.shape[0]}, Darstellung Grad {rep.degree}")
    return (rep.matrices @ xi).T


def build_measurement(
    rep: Representation,
    xi: Union[GeneratingVector, np.ndarray],
    omega: SamplingSet,
    basis: Union[str, np.ndarray, None] = "identity",
    *,
    normalize: bool = True,
) -> MeasurementEnsemble:
    """Setzt Φ zeilenweise aus den Orbitvektoren zusammen."""

    if not isinstance(xi, GeneratingVector):
        xi = GeneratingVector(np.asarray(xi, dtype=complex), "explicit", None)
    if xi.n != rep.degree:
        raise RepresentationError(f"ξ hat Länge {xi.n}, Darstellung Grad {rep.degree}")
    B, basis_name = resolve_basis(basis, rep.degree)
    rows = np.asarray(omega.indices, dtype=np.int64)
    if rows.size and (rows.min() < 0 or rows.max() >= rep.group.order):
        raise SamplingError("Ω enthält Indizes außerhalb der Gruppe")

    orbit = rep.matrices[rows] @ xi.values
    phi = orbit.conj() @ B
    if normalize:
        phi = phi / np.sqrt(max(len(rows), 1))
    logger.debug("Messmatrix %s gebaut (%s, Basis %s)", phi.shape, omega.mode, basis_name)
    return MeasurementEnsemble(phi, rep, xi, omega, B, normalize, basis_name)


def equivalent_generating_vector(xi: np.ndarray, V: np.ndarray) -> np.ndarray:
    """ξ_ρ = V*ξ für ρ = V*πV; zusammen mit Basis V*·B ergibt sich dieselbe Φ."""

    V = np.asarray(V, dtype=complex)
    if not is_unitary(V):
        raise RepresentationError("V ist nicht unitär")
    return V.conj().T @ np.asarray(xi, dtype=complex)


def plant_sparse_signal(n: int, s: int, rng: np.random.Generator) -> np.ndarray:
    """s-dünnes Signal mit unimodularen Einträgen auf zufälligem Träger."""

    if not 0 <= s <= n:
        raise SamplingError(f"Sparsity s={s} unzulässig für n={n}")
    x = np.zeros(n, dtype=complex)
    support = rng.choice(n, size=s, replace=False)
    x[support] = np.exp(2j * np.pi * rng.random(s))
    return x
