"""Kennzahlen der Orbit-Messmatrizen: Konstanten, RIP, BOS und Messschranken.

Die Orbit-Spaltenkonstante wird quadriert geführt: ``C`` ist
``sup_j sup_{‖y‖=1} Σ_{g∈Ω} |⟨e_j, π(g)y⟩|²``. Pro Koordinate j ist das das
Quadrat der größten Singulärwerte der Matrix mit den Zeilen ``π(g)[j, :]``.

Die Schrankenrechner werten nur Formeln aus. Die absoluten Konstanten
(``c``, ``C``) sind Parameter mit Vorgabe 1; die Ergebnisse sind keine
Garantien.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from module.darstellungen import BlockStructure, Representation
from module.fehler import BudgetExceededError, ConfigurationError, SamplingError
from module.gruppen import (
    GROUP_AFFINE,
    CosetPartition,
    FiniteGroup,
    count_admissible_sets,
    is_coset_admissible,
    iter_admissible_sets,
)
from module.sensing import MeasurementEnsemble, SamplingSet, orbit_matrix
from module.zufall import make_rng

__all__ = [
    "ENUMERATION_BUDGET",
    "ALL_SUBSETS_MAX_ORDER",
    "RIP_RECOVERY_THRESHOLD",
    "ConstantReport",
    "RipReport",
    "AllSubsets",
    "CosetAdmissibleFamily",
    "SampledFamily",
    "BosMeasurementConditions",
    "orbit_column_constant",
    "iter_family",
    "constant_over_family",
    "affine_omega1",
    "affine_slice",
    "known_constant_bound",
    "rip_constant",
    "orbit_bos_matrix",
    "discrete_bos_constant",
    "bos_constant",
    "bos_tail_threshold",
    "column_orthonormality_defect",
    "d_max",
    "thm1_measurement_bound",
    "cor36_measurement_bound",
    "bos_measurement_conditions",
]

logger = logging.getLogger(__name__)

# Obergrenze für Aufzählungen von Trägern bzw. Teilmengen; (n=64, s=3) passt,
# (n=64, s=6) nicht.
ENUMERATION_BUDGET = 2_000_000
ALL_SUBSETS_MAX_ORDER = 16
RIP_RECOVERY_THRESHOLD = 0.4931

_RIP_BATCH = 20_000


# ---------------------------------------------------------------------------
# Orbit-Spaltenkonstante
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantReport:
    value: float
    argmax_coordinate: int
    per_coordinate: Tuple[float, ...]
    omega: Tuple[int, ...] = ()


def _as_index_set(omega: Union[SamplingSet, Iterable[int]]) -> Tuple[int, ...]:
    indices = omega.indices if isinstance(omega, SamplingSet) else omega
    return tuple(sorted({int(g) for g in indices}))


def orbit_column_constant(rep: Representation, omega: Union[SamplingSet, Iterable[int]]) -> ConstantReport:
    """Exakter Wert von sup_j ‖(⟨e_j, π(g)·⟩)_{g∈Ω}‖² über Singulärwerte."""

    indices = _as_index_set(omega)
    if not indices:
        raise SamplingError("Orbit-Spaltenkonstante ist für leeres Ω nicht definiert")
    M = rep.matrices[list(indices)]
    # Zeile j jeder Matrix π(g), gestapelt über g: Form (n, |Ω|, n)
    stacked = np.transpose(M, (1, 0, 2))
    top = np.linalg.svd(stacked, compute_uv=False)[:, 0] ** 2
    j = int(np.argmax(top))
    return ConstantReport(float(top[j]), j, tuple(float(v) for v in top), indices)


@dataclass(frozen=True)
class AllSubsets:
    """Alle Teilmengen der Größe ``m`` (oder aller Größen) einer Grundmenge."""

    m: Optional[int] = None
    ground: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True, eq=False)
class CosetAdmissibleFamily:
    partition: CosetPartition


@dataclass(frozen=True)
class SampledFamily:
    """``k`` zufällige Teilmengen (Größe ``m`` oder zufällig) ohne Wiederholung."""

    k: int
    seed: Optional[int]
    m: Optional[int] = None


Family = Union[AllSubsets, CosetAdmissibleFamily, SampledFamily]


def iter_family(G: FiniteGroup, family: Family) -> Iterator[Tuple[int, ...]]:
    """Liefert die Mengen einer Familie in deterministischer Reihenfolge."""

    if isinstance(family, AllSubsets):
        ground = family.ground if family.ground is not None else tuple(range(G.order))
        if family.ground is None and G.order > ALL_SUBSETS_MAX_ORDER:
            raise BudgetExceededError(
                f"all_subsets nur bis |G| ≤ {ALL_SUBSETS_MAX_ORDER}, erhalten |G| = {G.order}"
            )
        sizes = [family.m] if family.m is not None else range(1, len(ground) + 1)
        total = sum(math.comb(len(ground), k) for k in sizes)
        if total > ENUMERATION_BUDGET:
            raise BudgetExceededError(f"{total} Teilmengen übersteigen das Budget {ENUMERATION_BUDGET}")
        for k in sizes:
            yield from itertools.combinations(ground, k)
        return

    if isinstance(family, CosetAdmissibleFamily):
        P = family.partition
        total = count_admissible_sets(P)
        if total > ENUMERATION_BUDGET:
            raise BudgetExceededError(f"{total} zulässige Mengen übersteigen das Budget")
        yield from iter_admissible_sets(P)
        return

    if isinstance(family, SampledFamily):
        rng = make_rng(family.seed)
        for _ in range(family.k):
            size = family.m if family.m is not None else int(rng.integers(1, G.order + 1))
            yield tuple(int(v) for v in np.sort(rng.choice(G.order, size=size, replace=False)))
        return

    raise TypeError(f"Unbekannte Familie: {family!r}")


def constant_over_family(rep: Representation, family: Family) -> float:
    """Maximum der Orbit-Spaltenkonstante über eine Familie von Ω."""

    best = 0.0
    count = 0
    for omega in iter_family(rep.group, family):
        best = max(best, orbit_column_constant(rep, omega).value)
        count += 1
    logger.info("Konstante über %d Mengen: %.12g", count, best)
    return best


def affine_slice(G: FiniteGroup, k: int) -> Tuple[int, ...]:
    """Indizes der Elemente {k}×Z_p^*."""

    if G.kind != GROUP_AFFINE:
        raise ConfigurationError("affine_slice braucht die affine Gruppe")
    return tuple(g for g, (kk, _l) in enumerate(G.params) if kk == k % G.param)


def affine_omega1(omega: Union[SamplingSet, Iterable[int]], p: Union[int, FiniteGroup]) -> int:
    """|Ω₁| mit Ω₁ = {k : (k,l) ∈ Ω für ein l}."""

    if isinstance(p, FiniteGroup):
        if p.kind != GROUP_AFFINE:
            raise ConfigurationError(f"affine_omega1 braucht die affine Gruppe, erhalten {p.name}")
        p = p.param
    order = p * (p - 1)
    indices = _as_index_set(omega)
    if any(not 0 <= g < order for g in indices):
        raise ConfigurationError(f"Ω enthält Indizes außerhalb der affinen Gruppe Aff({p})")
    return len({g % p for g in indices})


def known_constant_bound(
    rep: Representation,
    omega: Sequence[int],
    *,
    source_block: Optional[BlockStructure] = None,
    partition: Optional[CosetPartition] = None,
) -> Optional[Tuple[float, str, str]]:
    """Theoretische Schranke ``(Wert, Relation, Art)`` für bekannte Realisierungen.

    ``source_block`` ist die Blockstruktur vor der Konjugation mit U.
    """

    G = rep.group
    omega = _as_index_set(omega)
    realization = rep.realization
    if realization == "left_regular":
        return 1.0, "=", "left_regular"
    if realization == "trivial":
        return float(len(omega)), "=", "trivial"
    if realization == "irreducible":
        relation = "=" if len(omega) == G.order else "<="
        return G.order / rep.degree, relation, "irreducible"
    if realization == "affine":
        return float(affine_omega1(omega, G.param)), "<=", "affine_omega1"
    if realization.endswith("+U") and source_block is not None:
        worst = max(math.ceil(b.multiplicity / b.degree) for b in source_block.blocks)
        return G.order / source_block.n * worst, "<=", "block_diagonal_U"
    if (
        realization == "induced"
        and partition is not None
        and partition.is_normal
        and is_coset_admissible(omega, partition)
    ):
        return 1.0, "=", "induced_admissible"
    return None


# ---------------------------------------------------------------------------
# Restricted isometry constant durch Aufzählung
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RipReport:
    """δ_s mit 0-basiertem Zeugenträger."""

    s: int
    delta: float
    witness_support: Tuple[int, ...]
    supports_checked: int


def _support_batches(n: int, s: int) -> Iterator[Tuple[int, np.ndarray]]:
    combos = itertools.combinations(range(n), s)
    start = 0
    while True:
        chunk = list(itertools.islice(combos, _RIP_BATCH))
        if not chunk:
            return
        yield start, np.asarray(chunk, dtype=np.int64)
        start += len(chunk)


def rip_constant(
    ensemble: Union[MeasurementEnsemble, np.ndarray],
    s: int,
    *,
    workers: int = 1,
) -> RipReport:
    """δ_s = max_{|S|=s} ‖Φ_S*Φ_S − I‖ über alle Träger (exakt)."""

    phi = ensemble.phi if isinstance(ensemble, MeasurementEnsemble) else np.asarray(ensemble)
    n = phi.shape[1]
    if not 1 <= s <= n:
        raise ConfigurationError(f"Sparsity s={s} unzulässig für n={n}")
    total = math.comb(n, s)
    if total > ENUMERATION_BUDGET:
        logger.warning("RIP-Aufzählung mit %d Trägern abgelehnt", total)
        raise BudgetExceededError(
            f"C({n},{s}) = {total} Träger übersteigen das Budget {ENUMERATION_BUDGET}; "
            "bitte n oder s verkleinern"
        )

    deviation = phi.conj().T @ phi - np.eye(n)

    def evaluate(batch: Tuple[int, np.ndarray]) -> Tuple[float, int, Tuple[int, ...]]:
        start, supports = batch
        sub = deviation[supports[:, :, None], supports[:, None, :]]
        spread = np.max(np.abs(np.linalg.eigvalsh(sub)), axis=1)
        k = int(np.argmax(spread))
        return float(spread[k]), start + k, tuple(int(v) for v in supports[k])

    batches = _support_batches(n, s)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results: List[Tuple[float, int, Tuple[int, ...]]] = list(pool.map(evaluate, batches))
    else:
        results = [evaluate(batch) for batch in batches]

    best_value, _, best_support = results[0]
    for value, _index, support in results[1:]:
        if value > best_value:
            best_value, best_support = value, support
    logger.debug("δ_%d = %.6g nach %d Trägern", s, best_value, total)
    return RipReport(s, best_value, best_support, total)


# ---------------------------------------------------------------------------
# Beschränkte Orthonormalsysteme
# ---------------------------------------------------------------------------


def orbit_bos_matrix(rep: Representation, xi: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(1/√|G|)·(π(g)ξ)*_{g∈G}·B, Form |G|×n."""

    O = orbit_matrix(rep, xi)
    return O.conj().T @ np.asarray(B, dtype=complex) / np.sqrt(rep.group.order)


def column_orthonormality_defect(rep: Representation, xi: np.ndarray, B: np.ndarray) -> float:
    A = orbit_bos_matrix(rep, xi, B)
    return float(np.max(np.abs(A.conj().T @ A - np.eye(A.shape[1]))))


def discrete_bos_constant(U: np.ndarray, B: np.ndarray) -> float:
    """√N·max_{t,j} |⟨U e_t, B e_j⟩| für U (n×N) mit orthonormalen Zeilen."""

    U = np.asarray(U, dtype=complex)
    B = np.asarray(B, dtype=complex)
    return float(np.sqrt(U.shape[1]) * np.max(np.abs(U.T @ B.conj())))


def bos_constant(rep: Representation, xi: np.ndarray, B: np.ndarray) -> float:
    """max_{j,h} |⟨π(h)ξ, B e_j⟩|."""

    O = orbit_matrix(rep, xi)
    return discrete_bos_constant(O / np.sqrt(rep.group.order), B)


def bos_tail_threshold(d_max_value: int, n: int, group_order: int, delta: float) -> float:
    """√(2·d_max·ln(2n|G|/δ)); wird mit Wahrscheinlichkeit ≤ δ überschritten."""

    if not 0 < delta < 1:
        raise ConfigurationError(f"δ muss in (0,1) liegen: {delta}")
    return math.sqrt(2.0 * d_max_value * math.log(2.0 * n * group_order / delta))


def d_max(B: BlockStructure) -> int:
    """Größter Grad unter Blöcken mit Vielfachheit > 1, sonst 1."""

    repeated = [b.degree for b in B.blocks if b.multiplicity > 1]
    return max(repeated) if repeated else 1


# ---------------------------------------------------------------------------
# Messschranken
# ---------------------------------------------------------------------------


def _check_domain(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise ConfigurationError(f"{name} muss positiv sein: {value}")


def _check_unit_interval(**values: float) -> None:
    for name, value in values.items():
        if not 0 < value < 1:
            raise ConfigurationError(f"{name} muss in (0,1) liegen: {value}")


def thm1_measurement_bound(
    s: int, n: int, C_const: float, delta: float, eta: float, c: float = 1.0
) -> int:
    """⌈c·δ⁻²·s·C·max{(ln(sC))²·ln n·ln 4n, ln(1/η)}⌉."""

    _check_domain(s=s, n=n, C_const=C_const, c=c)
    _check_unit_interval(delta=delta, eta=eta)
    log_term = math.log(s * C_const) ** 2 * math.log(n) * math.log(4 * n)
    value = c * s * C_const / delta**2 * max(log_term, math.log(1.0 / eta))
    return math.ceil(value)


def cor36_measurement_bound(
    s: int,
    n: int,
    G_order: int,
    d_max_value: int,
    delta: float,
    eta: float,
    C: float = 1.0,
) -> int:
    """⌈C·δ⁻²·s·d_max·ln(8|G|)·ln(2/η)·max{ln(4s)²·ln(8n)·ln(δ⁻²s·d_max·ln(8|G|)·ln(2/η)), ln(2/η)}⌉."""

    _check_domain(s=s, n=n, G_order=G_order, d_max=d_max_value, C=C)
    _check_unit_interval(delta=delta, eta=eta)
    inner = s * d_max_value * math.log(8 * G_order) * math.log(2.0 / eta) / delta**2
    spread = max(
        math.log(4 * s) ** 2 * math.log(8 * n) * math.log(inner),
        math.log(2.0 / eta),
    )
    return math.ceil(C * inner * spread)


@dataclass(frozen=True)
class BosMeasurementConditions:
    """Zwei hinreichende Messzahlen und die daraus folgende RIP-Schranke."""

    m_first: int
    m_second: int
    rip_bound: float

    @property
    def m(self) -> int:
        return max(self.m_first, self.m_second)


def bos_measurement_conditions(
    s: int,
    n: int,
    G_order: int,
    d_max_value: int,
    delta1: float,
    delta2: float,
    eta: float,
    C1: float = 1.0,
    C2: float = 1.0,
) -> BosMeasurementConditions:
    """Kleinste m mit m/ln(9m) ≥ C₁δ₁⁻²d_max·s·ln(2n|G|/ε)·ln(4s)²·ln(8n) bzw.
    m ≥ C₂δ₂⁻²d_max·s·ln(2n|G|/ε)·ln(1/ε), ε = 1 − √(1−η).

    Dann gilt δ_s ≤ δ₁ + δ₁² + δ₂ mit Wahrscheinlichkeit ≥ 1 − η.
    """

    _check_domain(s=s, n=n, G_order=G_order, d_max=d_max_value, C1=C1, C2=C2)
    _check_unit_interval(delta1=delta1, delta2=delta2, eta=eta)
    eps = 1.0 - math.sqrt(1.0 - eta)
    log_size = math.log(2.0 * n * G_order / eps)
    first = C1 * d_max_value * s * log_size * math.log(4 * s) ** 2 * math.log(8 * n) / delta1**2

    def ratio(m: int) -> float:
        return m / math.log(9 * m)

    hi = 1
    while ratio(hi) < first:
        hi *= 2
    lo = max(1, hi // 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if ratio(mid) >= first:
            hi = mid
        else:
            lo = mid + 1
    second = math.ceil(C2 * d_max_value * s * log_size * math.log(1.0 / eps) / delta2**2)
    return BosMeasurementConditions(lo, second, delta1 + delta1**2 + delta2)
