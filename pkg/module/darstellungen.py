"""Unitäre (projektive) Darstellungen endlicher Gruppen.

Enthält die linksreguläre und die triviale Darstellung, die Kataloge
irreduzibler Darstellungen für zyklische, dihedrale und affine Gruppen,
Blockdiagonal-Zusammensetzungen mit Vielfachheiten, Basiswechsel
(``V·π(g)·V*``), die Realisierungsmatrix ``U = DFTⁿ·D`` sowie induzierte
Darstellungen über einer Nebenklassenzerlegung.

Matrizen werden dicht pro Element gehalten (Form ``(|G|, n, n)``).
Permutationsdarstellungen speichern zusätzlich die Permutation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import primitive_root

from module.fehler import InvariantViolation, RepresentationError
from module.fourier import dft_matrix
from module.gruppen import (
    GROUP_AFFINE,
    GROUP_CYCLIC,
    GROUP_DIHEDRAL,
    CosetPartition,
    CrossSection,
    FiniteGroup,
    build_group,
    default_cross_section,
    element_order,
)

__all__ = [
    "UNITARY_TOL",
    "EQUIVALENCE_TOL",
    "BlockEntry",
    "BlockStructure",
    "Representation",
    "alpha_index",
    "alpha_inverse",
    "beta_index",
    "representation_from_matrices",
    "left_regular",
    "trivial_rep",
    "irreducible_reps",
    "affine_rep",
    "diagonal_character_rep",
    "subgroup_characters",
    "block_diagonal",
    "random_block_diagonal",
    "conjugate_rep",
    "realization_transform_U",
    "subrow_dichotomy_defect",
    "induce",
    "is_unitary",
    "unitarity_defect",
    "homomorphism_defect",
    "verify_representation",
    "characters",
    "are_equivalent",
    "schur_orthogonality_defect",
]

logger = logging.getLogger(__name__)

UNITARY_TOL = 1e-10
EQUIVALENCE_TOL = 1e-8


# ---------------------------------------------------------------------------
# Blockstruktur und Indexabbildungen (1-basiert wie in der Literatur)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockEntry:
    irrep_id: str
    degree: int
    multiplicity: int


@dataclass(frozen=True)
class BlockStructure:
    """Geordnete Liste ``(τ, d_τ, m_τ)``; Gesamtgrad ``n = Σ d·m``."""

    blocks: Tuple[BlockEntry, ...]

    @property
    def T(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(b.degree * b.multiplicity for b in self.blocks)

    @property
    def offsets(self) -> Tuple[int, ...]:
        """Σ_{t<τ} d_t m_t für τ = 1 … T (Index 0 gehört zu τ = 1)."""

        result, acc = [], 0
        for b in self.blocks:
            result.append(acc)
            acc += b.degree * b.multiplicity
        return tuple(result)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[int, int]]) -> "BlockStructure":
        """Kurzform aus ``(d, m)``-Paaren; Kennungen werden durchnummeriert."""

        return cls(
            tuple(BlockEntry(f"block_{i + 1}", int(d), int(m)) for i, (d, m) in enumerate(pairs))
        )


def _block(B: BlockStructure, tau: int) -> BlockEntry:
    if not 1 <= tau <= B.T:
        raise RepresentationError(f"Blockindex τ={tau} außerhalb von 1…{B.T}")
    return B.blocks[tau - 1]


def alpha_index(B: BlockStructure, tau: int, kappa: int, iota: int) -> int:
    """α(τ,κ,ι) = Σ_{t<τ} d_t m_t + (κ-1)·d_τ + ι."""

    entry = _block(B, tau)
    if not 1 <= kappa <= entry.multiplicity:
        raise RepresentationError(f"Kopie κ={kappa} außerhalb von 1…{entry.multiplicity}")
    if not 1 <= iota <= entry.degree:
        raise RepresentationError(f"Koordinate ι={iota} außerhalb von 1…{entry.degree}")
    return B.offsets[tau - 1] + (kappa - 1) * entry.degree + iota


def alpha_inverse(B: BlockStructure, j: int) -> Tuple[int, int, int]:
    if not 1 <= j <= B.n:
        raise RepresentationError(f"Index j={j} außerhalb von 1…{B.n}")
    for tau, (offset, entry) in enumerate(zip(B.offsets, B.blocks), start=1):
        width = entry.degree * entry.multiplicity
        if j <= offset + width:
            local = j - offset - 1
            return tau, local // entry.degree + 1, local % entry.degree + 1
    raise RepresentationError(f"Index j={j} nicht zuordenbar")  # pragma: no cover


def beta_index(B: BlockStructure, tau: int, iota: int) -> int:
    """β(τ,ι) = Σ_{t<τ} d_t m_t + min(m_τ-1, ι-1)·d_τ + ι."""

    entry = _block(B, tau)
    if not 1 <= iota <= entry.degree:
        raise RepresentationError(f"Koordinate ι={iota} außerhalb von 1…{entry.degree}")
    return B.offsets[tau - 1] + min(entry.multiplicity - 1, iota - 1) * entry.degree + iota


# ---------------------------------------------------------------------------
# Darstellungstyp
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Representation:
    """Pro Gruppenelement eine ``n×n``-Matrix.

    ``cocycle`` (``|G|×|G|``, unimodular) ist nur für projektive
    Darstellungen gesetzt. ``realization`` beschreibt die Herkunft für
    Provenienzspalten, ``label`` die Kennung innerhalb eines Katalogs.
    """

    group: FiniteGroup
    matrices: np.ndarray
    realization: str
    label: str = ""
    cocycle: Optional[np.ndarray] = None
    block: Optional[BlockStructure] = None
    permutation: Optional[np.ndarray] = None

    @property
    def degree(self) -> int:
        return int(self.matrices.shape[1])

    def __call__(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def apply(self, g: int, vector: np.ndarray) -> np.ndarray:
        """π(g)·v, für Permutationsdarstellungen in O(n)."""

        if self.permutation is not None:
            out = np.zeros_like(vector, dtype=complex)
            out[self.permutation[g]] = vector
            return out
        return self.matrices[g] @ vector


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def representation_from_matrices(
    group: FiniteGroup,
    matrices: np.ndarray,
    realization: str = "matrix_file",
    label: str = "",
) -> Representation:
    """Verpackt beliebige Matrizen; die Prüfung übernimmt :func:`verify_representation`."""

    matrices = np.array(matrices, dtype=complex)
    if matrices.ndim != 3 or matrices.shape[1] != matrices.shape[2]:
        raise RepresentationError(f"Erwartet (|G|, n, n)-Matrizen, erhalten: {matrices.shape}")
    if matrices.shape[0] != group.order:
        raise RepresentationError(
            f"{matrices.shape[0]} Matrizen für eine Gruppe der Ordnung {group.order}"
        )
    return Representation(group, _readonly(matrices), realization, label)


def left_regular(G: FiniteGroup) -> Representation:
    """(L(g)f)(h) = f(g⁻¹h), also L(g)e_h = e_{gh}."""

    n = G.order
    perm = np.array(G.cayley, dtype=np.int64)
    matrices = np.zeros((n, n, n), dtype=complex)
    g_idx = np.repeat(np.arange(n), n)
    h_idx = np.tile(np.arange(n), n)
    matrices[g_idx, perm[g_idx, h_idx], h_idx] = 1.0
    return Representation(
        G, _readonly(matrices), "left_regular", "L", permutation=_readonly(perm)
    )


def trivial_rep(G: FiniteGroup, n: int = 1) -> Representation:
    if n < 1:
        raise RepresentationError(f"Grad der trivialen Darstellung muss ≥ 1 sein: {n}")
    matrices = np.broadcast_to(np.eye(n, dtype=complex), (G.order, n, n)).copy()
    perm = np.broadcast_to(np.arange(n), (G.order, n)).copy()
    return Representation(
        G, _readonly(matrices), "trivial", f"I_{n}", permutation=_readonly(perm)
    )


def _one_dimensional(G: FiniteGroup, values: np.ndarray, label: str) -> Representation:
    matrices = np.asarray(values, dtype=complex).reshape(G.order, 1, 1).copy()
    return Representation(G, _readonly(matrices), "irreducible", label)


def _cyclic_catalog(G: FiniteGroup) -> List[Representation]:
    n = G.order
    k = np.arange(n)
    return [
        _one_dimensional(G, np.exp(2j * np.pi * k * l / n), f"chi_{l}") for l in range(n)
    ]


def _dihedral_catalog(G: FiniteGroup) -> List[Representation]:
    n = G.param
    params = np.asarray(G.params)
    a, b = params[:, 0], params[:, 1]
    catalog = [
        _one_dimensional(G, np.ones(G.order), "trivial"),
        _one_dimensional(G, (-1.0) ** b, "sign"),
    ]
    if n % 2 == 0:
        catalog.append(_one_dimensional(G, (-1.0) ** a, "chi_rot"))
        catalog.append(_one_dimensional(G, (-1.0) ** (a + b), "chi_rot_sign"))
    for j in range(1, (n - 1) // 2 + 1):
        w = np.exp(2j * np.pi * j * a / n)
        matrices = np.zeros((G.order, 2, 2), dtype=complex)
        rot = b == 0
        # ρ_j(r^a) = diag(ω^{ja}, ω^{-ja}),  ρ_j(r^a s) = ρ_j(r^a)·[[0,1],[1,0]]
        matrices[rot, 0, 0] = w[rot]
        matrices[rot, 1, 1] = np.conj(w[rot])
        matrices[~rot, 0, 1] = w[~rot]
        matrices[~rot, 1, 0] = np.conj(w[~rot])
        catalog.append(Representation(G, _readonly(matrices), "irreducible", f"rho_{j}"))
    return catalog


def _affine_matrices(G: FiniteGroup) -> np.ndarray:
    p = G.param
    params = np.asarray(G.params)
    k, l = params[:, 0], params[:, 1]
    j = np.arange(1, p)
    matrices = np.zeros((G.order, p - 1, p - 1), dtype=complex)
    # (ρ(k,l)y)(j) = e^{2πijk/p}·y(jl)  →  Eintrag (j, jl mod p)
    cols = (j[None, :] * l[:, None]) % p - 1
    phases = np.exp(2j * np.pi * j[None, :] * k[:, None] / p)
    g_idx = np.repeat(np.arange(G.order), p - 1)
    matrices[g_idx, np.tile(j - 1, G.order), cols.ravel()] = phases.ravel()
    return matrices


def affine_rep(p: int, group: Optional[FiniteGroup] = None) -> Representation:
    """Die (p-1)-dimensionale Darstellung der affinen Gruppe auf ℂ^{Z_p^*}."""

    G = group if group is not None else build_group(GROUP_AFFINE, p)
    if G.kind != GROUP_AFFINE or G.param != p:
        raise RepresentationError(f"Gruppe {G.name} passt nicht zu affine_rep({p})")
    return Representation(G, _readonly(_affine_matrices(G)), "affine", "affine")


def _affine_catalog(G: FiniteGroup) -> List[Representation]:
    p = G.param
    l = np.asarray(G.params)[:, 1]
    root = int(primitive_root(p))
    dlog = {pow(root, e, p): e for e in range(p - 1)}
    exponent = np.array([dlog[int(v)] for v in l])
    catalog = [
        _one_dimensional(G, np.exp(2j * np.pi * t * exponent / (p - 1)), f"psi_{t}")
        for t in range(p - 1)
    ]
    catalog.append(Representation(G, _readonly(_affine_matrices(G)), "irreducible", "affine"))
    return catalog


def irreducible_reps(G: FiniteGroup) -> List[Representation]:
    """Vollständiger Satz inäquivalenter irreduzibler Darstellungen."""

    if G.kind == GROUP_CYCLIC:
        return _cyclic_catalog(G)
    if G.kind == GROUP_DIHEDRAL:
        return _dihedral_catalog(G)
    if G.kind == GROUP_AFFINE:
        return _affine_catalog(G)
    raise RepresentationError(f"Kein irreduzibler Katalog für Gruppentyp '{G.kind}'")


def subgroup_characters(H: FiniteGroup) -> List[Representation]:
    """Charaktere einer zyklischen (Unter-)Gruppe über einem Erzeuger."""

    order = H.order
    generator = next((g for g in range(order) if element_order(H, g) == order), None)
    if generator is None:
        raise RepresentationError(f"Untergruppe der Ordnung {order} ist nicht zyklisch")
    exponent = np.zeros(order, dtype=np.int64)
    current = H.identity
    for e in range(order):
        exponent[current] = e
        current = int(H.cayley[current, generator])
    return [
        _one_dimensional(H, np.exp(2j * np.pi * t * exponent / order), f"chi_{t}")
        for t in range(order)
    ]


# ---------------------------------------------------------------------------
# Prüfroutinen
# ---------------------------------------------------------------------------


def is_unitary(V: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    V = np.asarray(V)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        return False
    return float(np.max(np.abs(V.conj().T @ V - np.eye(V.shape[0])), initial=0.0)) <= tol


def unitarity_defect(rep: Representation) -> float:
    """max_g ‖π(g)*π(g) − I‖_max."""

    M = rep.matrices
    gram = np.conj(np.swapaxes(M, 1, 2)) @ M
    return float(np.max(np.abs(gram - np.eye(rep.degree))))


def homomorphism_defect(rep: Representation) -> float:
    """max_{g,h} ‖π(g)π(h) − λ(g,h)π(gh)‖_max."""

    M = rep.matrices
    G = rep.group
    worst = 0.0
    for g in range(G.order):
        product = M[g][None, :, :] @ M
        target = M[G.cayley[g]]
        if rep.cocycle is not None:
            target = target * rep.cocycle[g][:, None, None]
        worst = max(worst, float(np.max(np.abs(product - target))))
    return worst


def verify_representation(rep: Representation, tol: float = UNITARY_TOL) -> None:
    """Wirft :class:`InvariantViolation` mit dem Namen der verletzten Prüfung."""

    defect = unitarity_defect(rep)
    if defect > tol:
        raise InvariantViolation("unitarity", f"{rep.realization}: Abweichung {defect:.3e}")
    if rep.cocycle is not None:
        modulus = float(np.max(np.abs(np.abs(rep.cocycle) - 1.0)))
        if modulus > tol:
            raise InvariantViolation("cocycle", f"|λ(g,h)| weicht um {modulus:.3e} von 1 ab")
    defect = homomorphism_defect(rep)
    if defect > tol:
        raise InvariantViolation("homomorphism", f"{rep.realization}: Abweichung {defect:.3e}")


def characters(rep: Representation) -> np.ndarray:
    return np.trace(rep.matrices, axis1=1, axis2=2)


def are_equivalent(pi: Representation, rho: Representation, tol: float = EQUIVALENCE_TOL) -> bool:
    """Äquivalenz über Charaktere (gleicher Grad und gleiche Spurvektoren)."""

    if pi.group.order != rho.group.order or pi.degree != rho.degree:
        return False
    return float(np.max(np.abs(characters(pi) - characters(rho)))) <= tol


def schur_orthogonality_defect(catalog: Sequence[Representation]) -> float:
    """Maximale Abweichung von Σ_g π(g)_{kl} conj(ρ(g)_{k'l'}) = δ·|G|/d_π."""

    worst = 0.0
    for i, pi in enumerate(catalog):
        order = pi.group.order
        for j, rho in enumerate(catalog):
            S = np.einsum("gkl,gmn->klmn", pi.matrices, np.conj(rho.matrices))
            if i == j:
                d = pi.degree
                eye = np.eye(d)
                expected = np.einsum("km,ln->klmn", eye, eye) * order / d
            else:
                expected = np.zeros_like(S)
            worst = max(worst, float(np.max(np.abs(S - expected))))
    return worst


# ---------------------------------------------------------------------------
# Zusammensetzen und Basiswechsel
# ---------------------------------------------------------------------------


def block_diagonal(blocks: Sequence[Tuple[Representation, int]]) -> Representation:
    """Blockdiagonale Summe: alle Kopien von π_1, dann π_2, …"""

    blocks = [(rep, int(m)) for rep, m in blocks]
    if not blocks:
        raise RepresentationError("block_diagonal braucht mindestens einen Block")
    group = blocks[0][0].group
    for rep, m in blocks:
        if rep.group is not group and rep.group.descriptor() != group.descriptor():
            raise RepresentationError("Blöcke gehören zu verschiedenen Gruppen")
        if m < 1:
            raise RepresentationError(f"Vielfachheit muss ≥ 1 sein: {m}")
        if rep.cocycle is not None:
            raise RepresentationError("Projektive Blöcke werden nicht zusammengesetzt")
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if are_equivalent(blocks[i][0], blocks[j][0]):
                raise RepresentationError(
                    f"Blöcke {i + 1} und {j + 1} sind äquivalent; Vielfachheit zusammenfassen"
                )

    structure = BlockStructure(
        tuple(
            BlockEntry(rep.label or rep.realization or f"block_{i + 1}", rep.degree, m)
            for i, (rep, m) in enumerate(blocks)
        )
    )
    n = structure.n
    matrices = np.zeros((group.order, n, n), dtype=complex)
    start = 0
    for rep, m in blocks:
        d = rep.degree
        for _ in range(m):
            matrices[:, start : start + d, start : start + d] = rep.matrices
            start += d
    if len(blocks) == 1 and blocks[0][1] == 1:
        return replace(blocks[0][0], block=structure)
    return Representation(group, _readonly(matrices), "block_diagonal", "", block=structure)


def random_block_diagonal(
    G: FiniteGroup, n: int, rng: np.random.Generator, *, regular: bool = False, attempts: int = 64
) -> Representation:
    """Zufällige Vielfachheiten über dem irreduziblen Katalog mit Gesamtgrad n.

    Mit ``regular=True`` bleibt jede Vielfachheit m_τ ≤ d_τ, die Darstellung ist
    dann eine Teildarstellung der linksregulären und erlaubt ein strukturiertes ξ.
    Das setzt n ≤ |G| voraus. Läuft die Ziehung in eine Sackgasse (kein Block
    passt mehr), wird neu gezogen.
    """

    catalog = irreducible_reps(G)
    n = int(n)
    if regular and n > G.order:
        raise RepresentationError(f"Reguläre Blockstruktur braucht n ≤ |G| = {G.order}, erhalten n={n}")
    for _ in range(max(1, attempts) if regular else 1):
        multiplicity = [0] * len(catalog)
        remaining = n
        while remaining > 0:
            fitting = [
                i
                for i, rep in enumerate(catalog)
                if rep.degree <= remaining and (not regular or multiplicity[i] < rep.degree)
            ]
            if not fitting:
                break
            choice = fitting[int(rng.integers(len(fitting)))]
            multiplicity[choice] += 1
            remaining -= catalog[choice].degree
        if remaining == 0:
            return block_diagonal([(rep, m) for rep, m in zip(catalog, multiplicity) if m > 0])
        logger.debug("Sackgasse bei Restgrad %d, neue Ziehung", remaining)
    raise RepresentationError(f"Keine reguläre Blockstruktur vom Grad {n} nach {attempts} Ziehungen gefunden")


def diagonal_character_rep(G: FiniteGroup) -> Representation:
    """ρ(k) = diag(e^{2πikl/n}), l = 1 … n, für ``Z/n``.

    Entspricht der linksregulären Darstellung nach Konjugation mit F/√n und
    trägt die Blockstruktur aus n eindimensionalen Charakteren.
    """

    if G.kind != GROUP_CYCLIC:
        raise RepresentationError("Diagonale Charakterdarstellung nur für zyklische Gruppen")
    catalog = _cyclic_catalog(G)
    ordered = catalog[1:] + catalog[:1]
    rep = block_diagonal([(chi, 1) for chi in ordered])
    return replace(rep, realization="diagonal_character", label="rho")


def conjugate_rep(
    pi: Representation, V: np.ndarray, realization: Optional[str] = None
) -> Representation:
    """Realisierungswechsel g ↦ V·π(g)·V*; Blockinformationen entfallen."""

    V = np.asarray(V, dtype=complex)
    if V.shape != (pi.degree, pi.degree):
        raise RepresentationError(f"Basiswechsel der Form {V.shape} passt nicht zu Grad {pi.degree}")
    if not is_unitary(V):
        raise RepresentationError("Basiswechsel V ist nicht unitär")
    matrices = V[None, :, :] @ pi.matrices @ V.conj().T[None, :, :]
    return Representation(
        pi.group,
        _readonly(matrices),
        realization or f"{pi.realization}+conjugated",
        pi.label,
        cocycle=pi.cocycle,
    )


def realization_transform_U(B: BlockStructure) -> np.ndarray:
    """U = DFTⁿ·D mit d_α = √d_τ · DFT^{d_τ}_{κ mod d_τ, ι} (Rest 0 ↦ Zeile d_τ)."""

    n = B.n
    diagonal = np.empty(n, dtype=complex)
    for tau, (offset, entry) in enumerate(zip(B.offsets, B.blocks), start=1):
        d = entry.degree
        for kappa in range(1, entry.multiplicity + 1):
            row = kappa % d or d
            for iota in range(1, d + 1):
                position = offset + (kappa - 1) * d + iota - 1
                diagonal[position] = np.exp(2j * np.pi * row * iota / d)
    return dft_matrix(n) * diagonal[None, :]


def subrow_dichotomy_defect(B: BlockStructure, U: Optional[np.ndarray] = None) -> float:
    """Abweichung der Teilzeilen von U vom Muster 0 / Betrag d/n.

    Für feste Zeile j und Block τ haben die Teilzeilen zu Kopien κ₁, κ₂
    Skalarprodukt 0 für κ₁ ≢ κ₂ mod d und Betrag d/n für κ₁ ≡ κ₂ mod d.
    """

    U = realization_transform_U(B) if U is None else np.asarray(U, dtype=complex)
    n = B.n
    worst = 0.0
    for offset, entry in zip(B.offsets, B.blocks):
        d, m = entry.degree, entry.multiplicity
        # Form (n, m, d): Zeile j, Kopie κ, Koordinate ι
        sub = U[:, offset : offset + d * m].reshape(n, m, d)
        gram = np.abs(np.einsum("jki,jli->jkl", sub, sub.conj()))
        copies = np.arange(m)
        same = (copies[:, None] - copies[None, :]) % d == 0
        expected = np.where(same, d / n, 0.0)
        worst = max(worst, float(np.max(np.abs(gram - expected[None, :, :]))))
    return worst


# ---------------------------------------------------------------------------
# Induzierte Darstellungen
# ---------------------------------------------------------------------------


def induce(
    P: CosetPartition,
    sigma: Representation,
    gamma: Optional[CrossSection] = None,
) -> Representation:
    """π_σ auf Koordinaten {1,…,k}×(H\\G), Block (υ, υg) = σ(γ(υ) g γ(υg)⁻¹)."""

    G = P.parent
    if gamma is None:
        gamma = default_cross_section(P)
    if gamma.partition is not P:
        if gamma.partition.subgroup != P.subgroup or gamma.partition.parent is not G:
            raise RepresentationError("Querschnitt γ gehört zu einer anderen Zerlegung")
    for coset_id, r in enumerate(gamma.representative):
        if int(P.coset_of[r]) != coset_id:
            raise RepresentationError(f"γ({coset_id}) = g{r} liegt nicht in dieser Nebenklasse")
    embedding = sigma.group.embedding
    if embedding is None or tuple(embedding) != P.subgroup:
        raise RepresentationError("σ ist auf einer anderen Untergruppe definiert")
    if sigma.cocycle is not None:
        raise RepresentationError("Projektive σ werden nicht induziert")

    position = {h: i for i, h in enumerate(embedding)}
    k = sigma.degree
    cosets = P.index
    matrices = np.zeros((G.order, k * cosets, k * cosets), dtype=complex)
    for g in range(G.order):
        for v, rep_v in enumerate(gamma.representative):
            moved = int(G.cayley[rep_v, g])
            w = int(P.coset_of[moved])
            h = int(G.cayley[moved, G.inverse[gamma.representative[w]]])
            matrices[g, v * k : (v + 1) * k, w * k : (w + 1) * k] = sigma.matrices[position[h]]
    logger.debug("Induzierte Darstellung vom Grad %d über %d Nebenklassen", k * cosets, cosets)
    return Representation(G, _readonly(matrices), "induced", f"Ind({sigma.label})")
