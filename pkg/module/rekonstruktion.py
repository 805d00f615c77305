"""Rekonstruktion dünnbesetzter Signale aus komplexen Messungen.

* :func:`basis_pursuit` – min ‖z‖₁ unter Φz = y, ADMM über ℂ
  (Schrumpfung skaliert Beträge und erhält Phasen).
* :func:`omp` – Orthogonal Matching Pursuit.
* :func:`iht` – Iterative Hard Thresholding.
* :func:`l0_oracle` – erschöpfende Trägersuche mit kleinsten Quadraten.

Gleichstände werden überall zugunsten des kleinsten Index aufgelöst.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from module.fehler import BudgetExceededError, ConfigurationError, RecoveryError

__all__ = [
    "SOLVER_BP",
    "SOLVER_OMP",
    "SOLVER_IHT",
    "SOLVER_L0",
    "SOLVERS",
    "DEFAULT_TOL_FEAS",
    "DEFAULT_TOL_OPT",
    "DEFAULT_MAX_ITER",
    "RecoveryResult",
    "complex_shrink",
    "hard_threshold",
    "basis_pursuit",
    "omp",
    "iht",
    "l0_oracle",
    "recover",
]

logger = logging.getLogger(__name__)

SOLVER_BP = "basis_pursuit"
SOLVER_OMP = "omp"
SOLVER_IHT = "iht"
SOLVER_L0 = "l0_oracle"
SOLVERS = (SOLVER_BP, SOLVER_OMP, SOLVER_IHT, SOLVER_L0)

DEFAULT_TOL_FEAS = 1e-8
DEFAULT_TOL_OPT = 1e-7
DEFAULT_MAX_ITER = 50_000

# Abbruch der gierigen Verfahren, sobald das Residuum so klein ist.
_RESIDUAL_STOP = 1e-10
# IHT: nach so vielen Iterationen mit gleichem Träger wird auf dem Träger
# nachoptimiert.
_IHT_PATIENCE = 20
_L0_BUDGET = 2_000_000
_L0_BATCH = 20_000


@dataclass(frozen=True, eq=False)
class RecoveryResult:
    estimate: np.ndarray
    residual_norm: float
    iterations: int
    converged: bool
    solver: str
    flags: Tuple[str, ...] = ()

    @property
    def l1_norm(self) -> float:
        return float(np.sum(np.abs(self.estimate)))


def _result(
    phi: np.ndarray,
    y: np.ndarray,
    estimate: np.ndarray,
    iterations: int,
    converged: bool,
    solver: str,
    flags: Tuple[str, ...] = (),
) -> RecoveryResult:
    residual = float(np.linalg.norm(phi @ estimate - y))
    return RecoveryResult(estimate, residual, int(iterations), bool(converged), solver, flags)


def _prepare(phi: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    phi = np.asarray(phi, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if phi.ndim != 2 or y.shape != (phi.shape[0],):
        raise RecoveryError(f"Dimensionen passen nicht: Φ {phi.shape}, y {y.shape}")
    return phi, y


def complex_shrink(v: np.ndarray, threshold: float) -> np.ndarray:
    """Betragsschrumpfung v·max(0, 1 − κ/|v|)."""

    magnitude = np.abs(v)
    scale = np.maximum(0.0, 1.0 - threshold / np.maximum(magnitude, np.finfo(float).tiny))
    return v * scale


def hard_threshold(v: np.ndarray, s: int) -> np.ndarray:
    """Behält die s betragsgrößten Einträge (stabil, kleinster Index gewinnt)."""

    keep = np.argsort(-np.abs(v), kind="stable")[:s]
    out = np.zeros_like(v)
    out[keep] = v[keep]
    return out


def _least_squares(sub: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, bool]:
    """Kleinste Quadrate; bei Rangdefekt Pseudoinverse (zweiter Rückgabewert)."""

    if sub.shape[1] and np.linalg.matrix_rank(sub) < sub.shape[1]:
        return np.linalg.pinv(sub) @ y, True
    coef, *_ = np.linalg.lstsq(sub, y, rcond=None)
    return coef, False


def basis_pursuit(
    phi: np.ndarray,
    y: np.ndarray,
    tol_feas: float = DEFAULT_TOL_FEAS,
    tol_opt: float = DEFAULT_TOL_OPT,
    max_iter: int = DEFAULT_MAX_ITER,
    rho: float = 1.0,
) -> RecoveryResult:
    """ADMM für min ‖z‖₁ unter Φz = y.

    x-Schritt: Projektion auf {Φx = y}, z-Schritt: komplexe Schrumpfung,
    Schrittweite ρ per Residuenausgleich. Zum Schluss wird auf dem Träger
    von z nachoptimiert, falls das zulässig ist und ‖·‖₁ nicht wächst.
    """

    phi, y = _prepare(phi, y)
    n = phi.shape[1]
    pinv = np.linalg.pinv(phi)
    x_ls = pinv @ y
    infeasibility = float(np.linalg.norm(phi @ x_ls - y))
    if infeasibility > tol_feas * max(1.0, float(np.linalg.norm(y))):
        raise RecoveryError(f"y liegt nicht im Bild von Φ (Abstand {infeasibility:.3e})")
    projector = np.eye(n) - pinv @ phi

    z = x_ls.copy()
    u = np.zeros(n, dtype=complex)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        x = projector @ (z - u) + x_ls
        z_old = z
        z = complex_shrink(x + u, 1.0 / rho)
        u = u + x - z

        primal = float(np.linalg.norm(x - z))
        dual = rho * float(np.linalg.norm(z - z_old))
        eps_primal = math.sqrt(n) * tol_feas + tol_opt * max(np.linalg.norm(x), np.linalg.norm(z))
        eps_dual = math.sqrt(n) * tol_feas + tol_opt * rho * float(np.linalg.norm(u))
        if primal <= eps_primal and dual <= eps_dual:
            converged = True
            break
        if iterations % 10 == 0:
            if primal > 10.0 * dual:
                rho *= 2.0
                u /= 2.0
            elif dual > 10.0 * primal:
                rho /= 2.0
                u *= 2.0

    # zulässiger Punkt in der Nähe von z
    estimate = z - pinv @ (phi @ z - y)
    flags: Tuple[str, ...] = ()
    support = np.flatnonzero(np.abs(z) > tol_opt * max(1.0, float(np.max(np.abs(z), initial=0.0))))
    if support.size <= phi.shape[0]:
        polished = np.zeros(n, dtype=complex)
        if support.size:
            coef, _ = _least_squares(phi[:, support], y)
            polished[support] = coef
        feasible = np.linalg.norm(phi @ polished - y) <= tol_feas
        l1_estimate = float(np.sum(np.abs(estimate)))
        if feasible and np.sum(np.abs(polished)) <= l1_estimate + tol_opt * (1.0 + l1_estimate):
            estimate = polished
            flags = ("polished",)

    if not converged:
        logger.warning("basis_pursuit ohne Konvergenz nach %d Iterationen", iterations)
    return _result(phi, y, estimate, iterations, converged, SOLVER_BP, flags)


def omp(
    phi: np.ndarray,
    y: np.ndarray,
    s: int,
    tol_feas: float = DEFAULT_TOL_FEAS,
) -> RecoveryResult:
    """Greedy-Trägerwachstum über max |⟨Spalte, Residuum⟩|, dann kleinste Quadrate."""

    phi, y = _prepare(phi, y)
    m, n = phi.shape
    if not 0 <= s <= m:
        raise RecoveryError(f"OMP braucht s ≤ m, erhalten s={s}, m={m}")

    support: list[int] = []
    coef = np.zeros(0, dtype=complex)
    residual = y.copy()
    flags: set[str] = set()
    for _step in range(s):
        if np.linalg.norm(residual) <= _RESIDUAL_STOP:
            break
        correlation = np.abs(phi.conj().T @ residual)
        correlation[support] = -1.0
        support.append(int(np.argmax(correlation)))
        coef, fallback = _least_squares(phi[:, support], y)
        if fallback:
            flags.add("pinv_fallback")
        residual = y - phi[:, support] @ coef

    estimate = np.zeros(n, dtype=complex)
    estimate[support] = coef
    converged = float(np.linalg.norm(residual)) <= tol_feas
    return _result(phi, y, estimate, len(support), converged, SOLVER_OMP, tuple(sorted(flags)))


def iht(
    phi: np.ndarray,
    y: np.ndarray,
    s: int,
    step: Optional[float] = None,
    max_iter: int = 10_000,
    tol_feas: float = DEFAULT_TOL_FEAS,
) -> RecoveryResult:
    """x ← H_s(x + μ·Φ*(y − Φx)), μ = 1/‖Φ‖² als Vorgabe."""

    phi, y = _prepare(phi, y)
    n = phi.shape[1]
    if step is None:
        norm = float(np.linalg.norm(phi, 2))
        step = 1.0 / norm**2 if norm > 0 else 1.0

    x = np.zeros(n, dtype=complex)
    residual_norm = float(np.linalg.norm(y))
    if residual_norm <= _RESIDUAL_STOP:
        return _result(phi, y, x, 0, True, SOLVER_IHT)

    best_residual = residual_norm
    previous_support: Optional[Tuple[int, ...]] = None
    stable = 0
    converged = False
    flags: Tuple[str, ...] = ()
    iterations = 0
    for k in range(1, max_iter + 1):
        candidate = hard_threshold(x + step * (phi.conj().T @ (y - phi @ x)), s)
        if k > 1 and np.linalg.norm(candidate - x) <= 1e-14 * max(1.0, float(np.linalg.norm(x))):
            converged = True
            flags = ("stationary",)
            break
        x = candidate
        iterations = k
        residual_norm = float(np.linalg.norm(y - phi @ x))
        if residual_norm <= _RESIDUAL_STOP:
            converged = True
            break
        if residual_norm > 10.0 * best_residual:
            flags = ("diverged",)
            logger.warning("IHT divergiert nach %d Iterationen", k)
            break
        best_residual = min(best_residual, residual_norm)

        support = tuple(int(v) for v in np.flatnonzero(x))
        stable = stable + 1 if support == previous_support else 0
        previous_support = support
        if stable >= _IHT_PATIENCE and support:
            coef, _ = _least_squares(phi[:, list(support)], y)
            refit = np.zeros(n, dtype=complex)
            refit[list(support)] = coef
            if np.linalg.norm(phi @ refit - y) <= _RESIDUAL_STOP:
                x = refit
                converged = True
                flags = ("refit",)
                break
            stable = 0

    if not converged and "diverged" not in flags:
        converged = float(np.linalg.norm(phi @ x - y)) <= tol_feas
    return _result(phi, y, x, iterations, converged, SOLVER_IHT, flags)


def l0_oracle(
    phi: np.ndarray,
    y: np.ndarray,
    s: int,
    tol_feas: float = DEFAULT_TOL_FEAS,
) -> RecoveryResult:
    """Kleinster zulässiger Träger (Größe ≤ s), bei Gleichstand kleinstes Residuum."""

    phi, y = _prepare(phi, y)
    n = phi.shape[1]
    total = sum(math.comb(n, k) for k in range(s + 1))
    if total > _L0_BUDGET:
        raise BudgetExceededError(f"ℓ0-Orakel: {total} Träger übersteigen das Budget {_L0_BUDGET}")

    zero = np.zeros(n, dtype=complex)
    if np.linalg.norm(y) <= tol_feas:
        return _result(phi, y, zero, 1, True, SOLVER_L0)

    best: Tuple[float, Tuple[int, ...], np.ndarray] = (float(np.linalg.norm(y)), (), np.zeros(0))
    checked = 1
    for k in range(1, s + 1):
        feasible: Optional[Tuple[float, Tuple[int, ...], np.ndarray]] = None
        combos = itertools.combinations(range(n), k)
        while True:
            chunk = list(itertools.islice(combos, _L0_BATCH))
            if not chunk:
                break
            supports = np.asarray(chunk, dtype=np.int64)
            subs = np.transpose(phi[:, supports], (1, 0, 2))
            coefs = np.linalg.pinv(subs) @ y
            residuals = np.linalg.norm(np.einsum("bmk,bk->bm", subs, coefs) - y, axis=1)
            checked += len(chunk)
            i = int(np.argmin(residuals))
            candidate = (float(residuals[i]), tuple(chunk[i]), coefs[i])
            if candidate[0] < best[0]:
                best = candidate
            if candidate[0] <= tol_feas and (feasible is None or candidate[0] < feasible[0]):
                feasible = candidate
        if feasible is not None:
            estimate = zero.copy()
            estimate[list(feasible[1])] = feasible[2]
            return _result(phi, y, estimate, checked, True, SOLVER_L0)

    estimate = zero.copy()
    if best[1]:
        estimate[list(best[1])] = best[2]
    return _result(phi, y, estimate, checked, False, SOLVER_L0)


def recover(
    solver: str,
    phi: np.ndarray,
    y: np.ndarray,
    s: int,
    *,
    tol_feas: float = DEFAULT_TOL_FEAS,
    tol_opt: float = DEFAULT_TOL_OPT,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RecoveryResult:
    """Einheitlicher Einstieg für die Experimente."""

    if solver == SOLVER_BP:
        return basis_pursuit(phi, y, tol_feas=tol_feas, tol_opt=tol_opt, max_iter=max_iter)
    if solver == SOLVER_OMP:
        return omp(phi, y, s, tol_feas=tol_feas)
    if solver == SOLVER_IHT:
        return iht(phi, y, s, max_iter=max_iter, tol_feas=tol_feas)
    if solver == SOLVER_L0:
        return l0_oracle(phi, y, s, tol_feas=tol_feas)
    raise ConfigurationError(f"Unbekannter Löser '{solver}'. Erlaubt: {', '.join(SOLVERS)}")
