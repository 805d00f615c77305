"""Experimentbefehle: Prüfsuite, Konstantentabellen, RIP, Gegenbeispiel,
Phasenübergang und Messschranken.

Jeder Befehl nimmt eine :class:`~module.experiment_config.ExperimentConfig`
und liefert einen Bericht oder einen ``pandas.DataFrame``. Die CLI
(``orbit_cli.py``) und die Streamlit-Seiten rufen nur diese Funktionen auf.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from module.analyse import (
    RIP_RECOVERY_THRESHOLD,
    AllSubsets,
    CosetAdmissibleFamily,
    SampledFamily,
    affine_slice,
    column_orthonormality_defect,
    cor36_measurement_bound,
    d_max,
    iter_family,
    known_constant_bound,
    orbit_column_constant,
    rip_constant,
    thm1_measurement_bound,
    bos_measurement_conditions,
)
from module.darstellungen import (
    BlockStructure,
    Representation,
    beta_index,
    diagonal_character_rep,
    homomorphism_defect,
    irreducible_reps,
    is_unitary,
    realization_transform_U,
    schur_orthogonality_defect,
    subrow_dichotomy_defect,
    trivial_rep,
    unitarity_defect,
)
from module.experiment_config import (
    SIGNAL_COUNTEREXAMPLE,
    ExperimentConfig,
    ResolvedRepresentation,
    provenance,
    resolve_basis_spec,
    resolve_group,
    resolve_representation,
)
from module.fehler import ConfigurationError, InvariantViolation, RecoveryError
from module.fourier import group_fourier, group_inverse_fourier, plancherel_inner
from module.gruppen import (
    GROUP_AFFINE,
    GROUP_CYCLIC,
    CosetPartition,
    FiniteGroup,
    build_group,
    check_group_axioms,
    coset_partition,
)
from module.rekonstruktion import basis_pursuit, recover
from module.sensing import (
    OMEGA_COSET,
    OMEGA_FIXED,
    SCHEME_GAUSSIAN,
    SCHEME_STRUCTURED,
    GeneratingVector,
    SamplingSet,
    build_measurement,
    plant_sparse_signal,
    resolve_basis,
    sample_generating_vector,
    sample_omega,
)
from module.zufall import derive_seed, make_rng

__all__ = [
    "VERIFY_TOL",
    "SUCCESS_THRESHOLD",
    "CheckResult",
    "VerifyReport",
    "CounterexampleReport",
    "cmd_verify",
    "cmd_constant",
    "cmd_rip",
    "cmd_counterexample",
    "cmd_phase_transition",
    "cmd_bound",
    "adversarial_omega",
    "null_space_signal",
    "COMMANDS",
]

logger = logging.getLogger(__name__)

# Toleranz der Prüfsuite (Unitarität, Fourier-Identitäten, BOS-Spalten).
VERIFY_TOL = 1e-10
# Relativer Rekonstruktionsfehler, ab dem ein Versuch als Erfolg zählt.
SUCCESS_THRESHOLD = 1e-4
# Toleranz beim Abgleich berechneter Konstanten mit der Schranke.
BOUND_TOL = 1e-8


# ---------------------------------------------------------------------------
# Hilfen
# ---------------------------------------------------------------------------


def _resolve(config: ExperimentConfig) -> Tuple[FiniteGroup, ResolvedRepresentation]:
    G = resolve_group(config)
    return G, resolve_representation(config, G)


def _basis(config: ExperimentConfig, n: int) -> np.ndarray:
    B, _name = resolve_basis(resolve_basis_spec(config, n), n)
    return B


def _partition(config: ExperimentConfig, G: FiniteGroup, resolved: ResolvedRepresentation) -> Optional[CosetPartition]:
    if config.sensing.subgroup:
        return coset_partition(G, config.sensing.subgroup)
    return resolved.partition


def _structure(resolved: ResolvedRepresentation) -> Optional[BlockStructure]:
    return resolved.rep.block or resolved.source_block


def _generating_vector(
    config: ExperimentConfig, resolved: ResolvedRepresentation, seed: Optional[int]
) -> GeneratingVector:
    """ξ nach Schema; strukturierte ξ werden mit V in die konjugierte Basis gebracht."""

    scheme = config.sensing.xi_scheme
    n = resolved.rep.degree
    if scheme != SCHEME_STRUCTURED:
        return sample_generating_vector(n, scheme, seed)
    block = _structure(resolved)
    if block is None:
        raise ConfigurationError("Schema structured_block braucht eine blockdiagonale Darstellung")
    xi = sample_generating_vector(n, scheme, seed, block)
    if resolved.transform is None:
        return xi
    values = resolved.transform @ xi.values
    values.setflags(write=False)
    return GeneratingVector(values, xi.scheme, xi.seed, xi.block)


def _m_values(config: ExperimentConfig, G: FiniteGroup) -> Tuple[int, ...]:
    return config.grid.m or (G.order,)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False


@dataclass(frozen=True)
class VerifyReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> Tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {"check": c.name, "passed": c.passed, "skipped": c.skipped, "detail": c.detail}
                for c in self.checks
            ]
        )

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "übersprungen" if c.skipped else ("ok" if c.passed else "FEHLER")
            lines.append(f"{c.name:<28} {status:<12} {c.detail}".rstrip())
        verdict = "alle Prüfungen bestanden" if self.passed else (
            "fehlgeschlagen: " + ", ".join(c.name for c in self.failed)
        )
        lines.append(verdict)
        return "\n".join(lines)


def _defect_check(name: str, defect: float, tol: float = VERIFY_TOL) -> CheckResult:
    return CheckResult(name, defect <= tol, f"Abweichung {defect:.3e} (tol {tol:.0e})")


def _skip(name: str, reason: str) -> CheckResult:
    return CheckResult(name, True, reason, skipped=True)


def _check_group(G: FiniteGroup) -> CheckResult:
    try:
        check_group_axioms(G)
    except InvariantViolation as exc:
        return CheckResult("group_axioms", False, f"{exc.check}: {exc.detail}")
    return CheckResult("group_axioms", True, f"{G.name}, |G| = {G.order}")


def _check_harmonic(G: FiniteGroup, seed: int) -> List[CheckResult]:
    catalog = irreducible_reps(G)
    total = sum(rep.degree**2 for rep in catalog)
    results = [CheckResult("catalog_completeness", total == G.order, f"Σd² = {total}, |G| = {G.order}")]
    results.append(_defect_check("schur_orthogonality", schur_orthogonality_defect(catalog)))
    if total != G.order:
        results.append(_skip("plancherel", "Katalog unvollständig"))
        return results

    rng = make_rng(seed)
    parts = rng.standard_normal((4, G.order))
    f = parts[0] + 1j * parts[1]
    h = parts[2] + 1j * parts[3]
    F, H = group_fourier(f, catalog), group_fourier(h, catalog)
    roundtrip = float(np.max(np.abs(group_inverse_fourier(F) - f)))
    results.append(_defect_check("fourier_inversion", roundtrip))
    direct = complex(np.vdot(h, f))
    gap = abs(plancherel_inner(F, H) - direct) / max(1.0, abs(direct))
    results.append(_defect_check("plancherel", gap))
    return results


def _check_block_properties(
    config: ExperimentConfig, G: FiniteGroup, resolved: ResolvedRepresentation, seed: int
) -> List[CheckResult]:
    block = _structure(resolved)
    if block is None:
        reason = "keine Blockstruktur"
        return [_skip("u_transform_unitary", reason), _skip("u_subrow_dichotomy", reason),
                _skip("structured_xi_block_norms", reason), _skip("bos_orthonormality", reason)]

    U = realization_transform_U(block)
    results = [
        CheckResult("u_transform_unitary", is_unitary(U), f"n = {block.n}"),
        _defect_check("u_subrow_dichotomy", subrow_dichotomy_defect(block, U)),
    ]

    if any(b.multiplicity > b.degree for b in block.blocks):
        reason = "Vielfachheit > Grad (keine Teildarstellung der regulären)"
        return results + [_skip("structured_xi_block_norms", reason), _skip("bos_orthonormality", reason)]

    xi = sample_generating_vector(block.n, SCHEME_STRUCTURED, seed, block).values
    support = {j for j in range(block.n) if abs(xi[j]) > 0}
    beta_image = {
        beta_index(block, tau, iota) - 1
        for tau, entry in enumerate(block.blocks, start=1)
        for iota in range(1, entry.degree + 1)
    }
    norm_gap = 0.0
    for offset, entry in zip(block.offsets, block.blocks):
        d = entry.degree
        for kappa in range(entry.multiplicity):
            part = xi[offset + kappa * d : offset + (kappa + 1) * d]
            norm_gap = max(norm_gap, abs(float(np.vdot(part, part).real) - d))
    ok = norm_gap <= VERIFY_TOL and support == beta_image
    results.append(
        CheckResult(
            "structured_xi_block_norms",
            ok,
            f"‖ξ^(τ,κ)‖² − d bis {norm_gap:.3e}, Träger = Bild von β: {support == beta_image}",
        )
    )

    if resolved.rep.block is None and resolved.transform is None:
        results.append(_skip("bos_orthonormality", "Darstellung ohne bekannte Blockbasis"))
        return results
    if resolved.transform is not None:
        xi = resolved.transform @ xi
    B = _basis(config, resolved.rep.degree)
    results.append(_defect_check("bos_orthonormality", column_orthonormality_defect(resolved.rep, xi, B)))
    return results


def cmd_verify(config: ExperimentConfig) -> VerifyReport:
    """Führt alle Prüfungen aus; ``report.passed`` ist genau dann wahr, wenn keine scheitert."""

    G = resolve_group(config)
    checks: List[CheckResult] = [_check_group(G)]
    resolved = resolve_representation(config, G)
    rep = resolved.rep
    checks.append(_defect_check("unitarity", unitarity_defect(rep)))
    if checks[-1].passed:
        checks.append(_defect_check("homomorphism", homomorphism_defect(rep)))
    else:
        checks.append(_skip("homomorphism", "nicht unitär"))
    checks.extend(_check_harmonic(G, derive_seed(config.master_seed, 0, "verify", "fourier")))
    if checks[1].passed:
        checks.extend(
            _check_block_properties(config, G, resolved, derive_seed(config.master_seed, 0, "verify", "xi"))
        )
    report = VerifyReport(tuple(checks))
    for failure in report.failed:
        logger.warning("Prüfung %s fehlgeschlagen: %s", failure.name, failure.detail)
    return report


# ---------------------------------------------------------------------------
# constant
# ---------------------------------------------------------------------------


def _omega_family(config: ExperimentConfig, G: FiniteGroup, resolved: ResolvedRepresentation):
    family = config.constant.family
    if family == "full":
        return iter([tuple(range(G.order))])
    if family == "sampled":
        seed = derive_seed(config.master_seed, 0, "constant")
        return iter_family(G, SampledFamily(config.constant.samples, seed, config.constant.m))
    if family == "all_subsets":
        return iter_family(G, AllSubsets(config.constant.m))
    if family == "coset_admissible":
        partition = _partition(config, G, resolved)
        if partition is None:
            raise ConfigurationError("coset_admissible braucht sensing.subgroup oder eine induzierte Darstellung")
        return iter_family(G, CosetAdmissibleFamily(partition))
    if G.kind != GROUP_AFFINE:
        raise ConfigurationError("constant.family = 'affine_slice' braucht die affine Gruppe")
    return iter(affine_slice(G, k) for k in range(G.param))


def cmd_constant(config: ExperimentConfig) -> pd.DataFrame:
    """Orbit-Spaltenkonstante je Ω der Familie, neben der bekannten Schranke."""

    G, resolved = _resolve(config)
    rep = resolved.rep
    base = provenance(config, rep)
    partition = _partition(config, G, resolved)
    rows = []
    for omega in _omega_family(config, G, resolved):
        report = orbit_column_constant(rep, omega)
        known = known_constant_bound(rep, omega, source_block=resolved.source_block, partition=partition)
        bound, relation, kind = known if known is not None else (np.nan, "", "")
        if known is None:
            holds = None
        elif relation == "=":
            holds = abs(report.value - bound) <= BOUND_TOL
        else:
            holds = report.value <= bound + BOUND_TOL
        rows.append(
            {
                **base,
                "degree": rep.degree,
                "family": config.constant.family,
                "omega_size": len(omega),
                "omega": " ".join(str(g) for g in omega),
                "constant": report.value,
                "argmax_coordinate": report.argmax_coordinate,
                "bound": bound,
                "relation": relation,
                "bound_kind": kind,
                "bound_holds": holds,
            }
        )
    logger.info("Konstantentabelle mit %d Zeilen für %s", len(rows), rep.realization)
    return pd.DataFrame(rows)


# ---------------------------------------------------------------------------
# rip
# ---------------------------------------------------------------------------


def _draw_omega(
    config: ExperimentConfig,
    G: FiniteGroup,
    m: int,
    seed: int,
    partition: Optional[CosetPartition],
) -> SamplingSet:
    mode = config.sensing.omega_mode
    if mode == OMEGA_COSET and partition is None:
        raise ConfigurationError("omega_mode = 'coset_admissible' braucht sensing.subgroup")
    return sample_omega(G, m, mode, seed, partition)


def cmd_rip(config: ExperimentConfig, on_cell: Optional[Callable[[], None]] = None) -> pd.DataFrame:
    """Exakte δ_s gezogener Messmatrizen über das (m, s)-Raster.

    ``on_cell`` wird nach jedem m-Wert aufgerufen (Fortschrittsanzeige).
    """

    G, resolved = _resolve(config)
    rep = resolved.rep
    B = _basis(config, rep.degree)
    partition = _partition(config, G, resolved)
    base = provenance(config, rep)
    rows = []
    for m in _m_values(config, G):
        for t in range(config.trials):
            xi = _generating_vector(config, resolved, derive_seed(config.master_seed, t, "xi", m))
            omega_seed = derive_seed(config.master_seed, t, "omega", m)
            omega = _draw_omega(config, G, m, omega_seed, partition)
            ensemble = build_measurement(rep, xi, omega, B)
            for s in config.grid.s:
                report = rip_constant(ensemble, s, workers=config.threads)
                rows.append(
                    {
                        **base,
                        "n": rep.degree,
                        "m": m,
                        "s": s,
                        "trial": t,
                        "xi_seed": xi.seed,
                        "omega_seed": omega_seed,
                        "delta_s": report.delta,
                        "witness_support": " ".join(str(j) for j in report.witness_support),
                        "supports_checked": report.supports_checked,
                        "below_recovery_threshold": report.delta < RIP_RECOVERY_THRESHOLD,
                    }
                )
        if on_cell is not None:
            on_cell()
    return pd.DataFrame(rows)


# ---------------------------------------------------------------------------
# counterexample
# ---------------------------------------------------------------------------


def adversarial_omega(n: int, s: int) -> SamplingSet:
    """Ω = {k : k ≢ 0 mod s}; |Ω| = n − n/s."""

    return SamplingSet(tuple(k for k in range(n) if k % s), OMEGA_FIXED, None)


def null_space_signal(xi: np.ndarray, s: int) -> np.ndarray:
    """x mit x_j = conj(1/ξ_j) auf dem Träger der Deltafolge (Abstand n/s)."""

    xi = np.asarray(xi, dtype=complex)
    n = xi.shape[0]
    if n % s:
        raise ConfigurationError(f"s = {s} teilt n = {n} nicht")
    x = np.zeros(n, dtype=complex)
    support = np.arange(0, n, n // s)
    if np.any(np.abs(xi[support]) == 0):
        raise ConfigurationError("ξ verschwindet auf dem Träger der Deltafolge")
    x[support] = np.conj(1.0 / xi[support])
    return x


@dataclass(frozen=True, eq=False)
class CounterexampleReport:
    n: int
    s: int
    m: int
    omega: Tuple[int, ...]
    planted: np.ndarray
    sparsity: int
    null_residual: float
    bp_estimate: np.ndarray
    bp_l1: float
    planted_l1: float
    bp_distance: float
    trivial_n: int
    collision_pair: Tuple[int, int]
    collision_residual: float

    @property
    def recovery_failed(self) -> bool:
        return self.bp_distance > SUCCESS_THRESHOLD * float(np.linalg.norm(self.planted))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "n": self.n,
                    "s": self.s,
                    "m": self.m,
                    "sparsity": self.sparsity,
                    "null_residual": self.null_residual,
                    "planted_l1": self.planted_l1,
                    "bp_l1": self.bp_l1,
                    "bp_distance": self.bp_distance,
                    "recovery_failed": self.recovery_failed,
                    "trivial_n": self.trivial_n,
                    "collision_pair": " ".join(str(j) for j in self.collision_pair),
                    "collision_residual": self.collision_residual,
                }
            ]
        )

    def render(self) -> str:
        return "\n".join(
            [
                f"Fourier-Fall Z/{self.n}, s = {self.s}: |Ω| = {self.m} = n − n/s",
                f"  ‖x‖₀ = {self.sparsity}, ‖Φx‖_∞ = {self.null_residual:.3e}",
                f"  Basis Pursuit: ‖x̂‖₁ = {self.bp_l1:.6g} ≤ ‖x‖₁ = {self.planted_l1:.6g}, "
                f"‖x̂ − x‖₂ = {self.bp_distance:.6g}",
                f"  Rekonstruktion gescheitert: {'ja' if self.recovery_failed else 'nein'}",
                f"Trivialer Fall n = {self.trivial_n}: Φe_{self.collision_pair[0]}·c₁ = "
                f"Φe_{self.collision_pair[1]}·c₂, Abweichung {self.collision_residual:.3e}",
            ]
        )


def _trivial_collision(n: int, seed: int) -> Tuple[Tuple[int, int], float]:
    """Zwei verschiedene 1-dünne Vektoren mit gleicher Messung unter I_n."""

    G = build_group(GROUP_CYCLIC, n)
    rep = trivial_rep(G, n)
    xi = sample_generating_vector(n, SCHEME_GAUSSIAN, seed)
    ensemble = build_measurement(rep, xi, SamplingSet(tuple(range(n)), OMEGA_FIXED))
    a, b = (int(j) for j in np.flatnonzero(np.abs(xi.values) > 0)[:2])
    x1 = np.zeros(n, dtype=complex)
    x2 = np.zeros(n, dtype=complex)
    x1[a] = np.conj(1.0 / xi.values[a])
    x2[b] = np.conj(1.0 / xi.values[b])
    return (a, b), float(np.max(np.abs(ensemble.phi @ (x1 - x2))))


def cmd_counterexample(n: int, s: int, seed: int = 0, tol: float = VERIFY_TOL) -> CounterexampleReport:
    """Fester Ω reicht selbst mit n − n/s Messungen nicht für s-dünne Signale."""

    if n < 2 or s < 2:
        raise ConfigurationError(f"Gegenbeispiel braucht n, s ≥ 2, erhalten n = {n}, s = {s}")
    if n % s:
        raise ConfigurationError(f"s = {s} teilt n = {n} nicht")

    G = build_group(GROUP_CYCLIC, n)
    rho = diagonal_character_rep(G)
    xi = sample_generating_vector(n, SCHEME_GAUSSIAN, derive_seed(seed, 0, "counterexample", n, s))
    omega = adversarial_omega(n, s)
    ensemble = build_measurement(rho, xi, omega)
    x = null_space_signal(xi.values, s)
    y = ensemble.phi @ x
    null_residual = float(np.max(np.abs(y)))
    if null_residual > tol:
        raise InvariantViolation("counterexample_nullspace", f"‖Φx‖_∞ = {null_residual:.3e}")

    bp = basis_pursuit(ensemble.phi, y)
    pair, collision = _trivial_collision(max(n, 3), derive_seed(seed, 0, "trivial", n))
    if collision > tol:
        raise InvariantViolation("trivial_collision", f"‖Φ(x₁ − x₂)‖_∞ = {collision:.3e}")

    report = CounterexampleReport(
        n=n,
        s=s,
        m=omega.m,
        omega=omega.indices,
        planted=x,
        sparsity=int(np.count_nonzero(x)),
        null_residual=null_residual,
        bp_estimate=bp.estimate,
        bp_l1=bp.l1_norm,
        planted_l1=float(np.sum(np.abs(x))),
        bp_distance=float(np.linalg.norm(bp.estimate - x)),
        trivial_n=max(n, 3),
        collision_pair=pair,
        collision_residual=collision,
    )
    logger.info("Gegenbeispiel n=%d s=%d: ‖x̂ − x‖ = %.3e", n, s, report.bp_distance)
    return report


# ---------------------------------------------------------------------------
# phase-transition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _TrialOutcome:
    trial: int
    success: bool
    relative_error: float
    converged: bool
    runtime_ms: float


def _run_trial(
    config: ExperimentConfig,
    G: FiniteGroup,
    resolved: ResolvedRepresentation,
    B: np.ndarray,
    partition: Optional[CosetPartition],
    s: int,
    m: int,
    trial: int,
) -> _TrialOutcome:
    seed = config.master_seed
    rep = resolved.rep
    n = rep.degree
    xi = _generating_vector(config, resolved, derive_seed(seed, trial, "xi", s, m))
    counterexample = config.sensing.signal == SIGNAL_COUNTEREXAMPLE
    if counterexample and config.sensing.omega_mode == OMEGA_FIXED:
        omega = adversarial_omega(G.order, s)
    else:
        omega = _draw_omega(config, G, m, derive_seed(seed, trial, "omega", s, m), partition)
    if counterexample:
        x = null_space_signal(xi.values, s)
    else:
        x = plant_sparse_signal(n, s, make_rng(derive_seed(seed, trial, "signal", s, m)))

    ensemble = build_measurement(rep, xi, omega, B)
    y = ensemble.phi @ x
    started = time.perf_counter()
    try:
        result = recover(
            config.solver.name,
            ensemble.phi,
            y,
            s,
            tol_feas=config.solver.tol_feas,
            tol_opt=config.solver.tol_opt,
            max_iter=config.solver.max_iter,
        )
    except RecoveryError as exc:
        logger.warning("Versuch %d (s=%d, m=%d) ohne Lösung: %s", trial, s, m, exc)
        return _TrialOutcome(trial, False, float("inf"), False, 0.0)
    elapsed = (time.perf_counter() - started) * 1000.0
    norm = float(np.linalg.norm(x))
    error = float(np.linalg.norm(result.estimate - x)) / norm if norm else float(np.linalg.norm(result.estimate))
    return _TrialOutcome(trial, error <= SUCCESS_THRESHOLD, error, result.converged, elapsed)


def cmd_phase_transition(
    config: ExperimentConfig, on_cell: Optional[Callable[[], None]] = None
) -> pd.DataFrame:
    """Erfolgsquote je (s, m)-Zelle; Versuche laufen parallel mit eigenen Seeds."""

    G, resolved = _resolve(config)
    rep = resolved.rep
    if config.sensing.signal == SIGNAL_COUNTEREXAMPLE and (
        G.kind != GROUP_CYCLIC or rep.degree != G.order
    ):
        raise ConfigurationError("signal = 'counterexample' braucht Z/n und eine Darstellung vom Grad n")
    B = _basis(config, rep.degree)
    partition = _partition(config, G, resolved)
    base = provenance(config, rep)
    rows = []
    for s in config.grid.s:
        if s > rep.degree:
            raise ConfigurationError(f"s = {s} übersteigt n = {rep.degree}")
        for m in _m_values(config, G):
            cell: Callable[[int], _TrialOutcome] = lambda t, s=s, m=m: _run_trial(
                config, G, resolved, B, partition, s, m, t
            )
            if config.threads > 1:
                with ThreadPoolExecutor(max_workers=config.threads) as pool:
                    outcomes = list(pool.map(cell, range(config.trials)))
            else:
                outcomes = [cell(t) for t in range(config.trials)]
            outcomes.sort(key=lambda o: o.trial)
            successes = sum(o.success for o in outcomes)
            effective_m = (
                G.order - G.order // s
                if config.sensing.signal == SIGNAL_COUNTEREXAMPLE and config.sensing.omega_mode == OMEGA_FIXED
                else m
            )
            row = {
                **base,
                "n": rep.degree,
                "s": s,
                "m": effective_m,
                "signal": config.sensing.signal,
                "trials": len(outcomes),
                "successes": successes,
                "success_rate": successes / len(outcomes),
                "median_relative_error": float(np.median([o.relative_error for o in outcomes])),
                "converged_rate": sum(o.converged for o in outcomes) / len(outcomes),
            }
            if config.record_runtime:
                row["runtime_ms"] = float(np.mean([o.runtime_ms for o in outcomes]))
            logger.debug("Zelle s=%d m=%d: %d/%d Erfolge", s, m, successes, len(outcomes))
            rows.append(row)
            if on_cell is not None:
                on_cell()
    return pd.DataFrame(rows)


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------


def _full_constant(rep: Representation) -> float:
    return orbit_column_constant(rep, range(rep.group.order)).value


def cmd_bound(config: ExperimentConfig) -> pd.DataFrame:
    """Messschranken über das (n, s)-Raster; ``*_vacuous`` markiert Schranken > n."""

    G, resolved = _resolve(config)
    rep = resolved.rep
    bound = config.bound
    C_const = bound.C_const if bound.C_const is not None else _full_constant(rep)
    block = _structure(resolved)
    d_max_value = d_max(block) if block is not None else None
    base = provenance(config, rep)
    rows = []
    for n in config.grid.n or (rep.degree,):
        for s in config.grid.s:
            thm1 = thm1_measurement_bound(s, n, C_const, bound.delta, bound.eta, bound.c)
            row: Dict[str, object] = {
                **base,
                "n": n,
                "s": s,
                "group_order": G.order,
                "C_const": C_const,
                "delta": bound.delta,
                "eta": bound.eta,
                "thm1_bound": thm1,
                "thm1_vacuous": thm1 > n,
            }
            if d_max_value is not None:
                cor36 = cor36_measurement_bound(s, n, G.order, d_max_value, bound.delta, bound.eta, bound.C)
                conditions = bos_measurement_conditions(
                    s, n, G.order, d_max_value, bound.delta, bound.delta, bound.eta, bound.C, bound.C
                )
                row.update(
                    {
                        "d_max": d_max_value,
                        "cor36_bound": cor36,
                        "cor36_vacuous": cor36 > n,
                        "bos_m_first": conditions.m_first,
                        "bos_m_second": conditions.m_second,
                        "bos_rip_bound": conditions.rip_bound,
                    }
                )
            else:
                row.update(
                    {
                        "d_max": None,
                        "cor36_bound": None,
                        "cor36_vacuous": None,
                        "bos_m_first": None,
                        "bos_m_second": None,
                        "bos_rip_bound": None,
                    }
                )
            rows.append(row)
    return pd.DataFrame(rows)


COMMANDS: Dict[str, Callable[[ExperimentConfig], object]] = {
    "verify": cmd_verify,
    "constant": cmd_constant,
    "rip": cmd_rip,
    "phase-transition": cmd_phase_transition,
    "bound": cmd_bound,
}
