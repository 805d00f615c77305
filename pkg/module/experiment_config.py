"""Experimentkonfiguration aus TOML-Dateien (bzw. Streamlit-Widgets).

Eine Konfiguration besteht aus flachen Abschnitten::

    [experiment]      trials, master_seed, output, threads, record_runtime, timestamp
    [group]           kind = "cyclic" | "dihedral" | "affine", param
    [representation]  realization, degree, irrep, blocks, block_seed, regular,
                      subgroup, sigma, cross_section, matrix_file, conjugate, conjugate_file
    [basis]           kind = "identity" | "dft" | "file", path
    [sensing]         xi_scheme, omega_mode, subgroup, signal
    [grid]            n, s, m  (Listen)
    [solver]          name, tol_feas, tol_opt, max_iter
    [bound]           delta, eta, c, C, C_const
    [constant]        family, samples, m
    [counterexample]  n, s

Fehlende Werte fallen auf dokumentierte Vorgaben zurück, ungültige Werte
führen zu :class:`~module.fehler.ConfigurationError`.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from module.darstellungen import (
    BlockStructure,
    Representation,
    affine_rep,
    block_diagonal,
    conjugate_rep,
    diagonal_character_rep,
    induce,
    irreducible_reps,
    left_regular,
    random_block_diagonal,
    realization_transform_U,
    representation_from_matrices,
    subgroup_characters,
    trivial_rep,
)
from module.fehler import ConfigurationError, OrbitSensingError
from module.fourier import cyclic_fourier_matrix, dft_matrix
from module.gruppen import (
    GROUP_CYCLIC,
    CosetPartition,
    FiniteGroup,
    build_group,
    coset_partition,
    cross_section,
    subgroup_group,
)
from module.matrix_io import read_complex_matrix, read_matrix_stack
from module.rekonstruktion import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL_FEAS,
    DEFAULT_TOL_OPT,
    SOLVER_BP,
    SOLVERS,
)
from module.sensing import OMEGA_FIXED, OMEGA_MODES, SCHEME_GAUSSIAN, XI_SCHEMES
from module.zufall import make_rng

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

__all__ = [
    "REALIZATIONS",
    "FAMILIES",
    "CONJUGATIONS",
    "SIGNAL_RANDOM",
    "SIGNAL_COUNTEREXAMPLE",
    "GroupSpec",
    "RepresentationSpec",
    "BasisSpec",
    "SensingSpec",
    "GridSpec",
    "SolverSpec",
    "BoundSpec",
    "ConstantSpec",
    "CounterexampleSpec",
    "ExperimentConfig",
    "ResolvedRepresentation",
    "load_config",
    "config_from_mapping",
    "with_overrides",
    "resolve_group",
    "resolve_representation",
    "resolve_basis_spec",
    "provenance",
]

logger = logging.getLogger(__name__)

REALIZATIONS = (
    "left_regular",
    "trivial",
    "irreducible",
    "affine",
    "diagonal_character",
    "block_diagonal",
    "random_block_diagonal",
    "induced",
    "matrix_file",
)
CONJUGATIONS = ("none", "dft", "U", "file")
BASES = ("identity", "dft", "file")
FAMILIES = ("full", "sampled", "all_subsets", "coset_admissible", "affine_slice")

SIGNAL_RANDOM = "random"
SIGNAL_COUNTEREXAMPLE = "counterexample"

# Vorgaben, falls ein Abschnitt oder Schlüssel fehlt.
_DEFAULT_TRIALS = 1
_DEFAULT_MASTER_SEED = 0
_DEFAULT_DELTA = 0.5
_DEFAULT_ETA = 0.01
_DEFAULT_SAMPLES = 100


@dataclass(frozen=True)
class GroupSpec:
    kind: str = GROUP_CYCLIC
    param: int = 8


@dataclass(frozen=True)
class RepresentationSpec:
    realization: str = "left_regular"
    degree: int = 1
    irrep: int = 0
    blocks: Tuple[Tuple[int, int], ...] = ()
    block_seed: int = 0
    regular: bool = False
    subgroup: Tuple[int, ...] = ()
    sigma: str = "trivial"
    cross_section: Tuple[int, ...] = ()
    matrix_file: Optional[Path] = None
    conjugate: str = "none"
    conjugate_file: Optional[Path] = None


@dataclass(frozen=True)
class BasisSpec:
    kind: str = "identity"
    path: Optional[Path] = None


@dataclass(frozen=True)
class SensingSpec:
    xi_scheme: str = SCHEME_GAUSSIAN
    omega_mode: str = OMEGA_FIXED
    subgroup: Tuple[int, ...] = ()
    signal: str = SIGNAL_RANDOM


@dataclass(frozen=True)
class GridSpec:
    n: Tuple[int, ...] = ()
    s: Tuple[int, ...] = (1,)
    m: Tuple[int, ...] = ()


@dataclass(frozen=True)
class SolverSpec:
    name: str = SOLVER_BP
    tol_feas: float = DEFAULT_TOL_FEAS
    tol_opt: float = DEFAULT_TOL_OPT
    max_iter: int = DEFAULT_MAX_ITER


@dataclass(frozen=True)
class BoundSpec:
    delta: float = _DEFAULT_DELTA
    eta: float = _DEFAULT_ETA
    c: float = 1.0
    C: float = 1.0
    C_const: Optional[float] = None


@dataclass(frozen=True)
class ConstantSpec:
    family: str = "sampled"
    samples: int = _DEFAULT_SAMPLES
    m: Optional[int] = None


@dataclass(frozen=True)
class CounterexampleSpec:
    n: int = 8
    s: int = 2


@dataclass(frozen=True)
class ExperimentConfig:
    group: GroupSpec = field(default_factory=GroupSpec)
    representation: RepresentationSpec = field(default_factory=RepresentationSpec)
    basis: BasisSpec = field(default_factory=BasisSpec)
    sensing: SensingSpec = field(default_factory=SensingSpec)
    grid: GridSpec = field(default_factory=GridSpec)
    solver: SolverSpec = field(default_factory=SolverSpec)
    bound: BoundSpec = field(default_factory=BoundSpec)
    constant: ConstantSpec = field(default_factory=ConstantSpec)
    counterexample: CounterexampleSpec = field(default_factory=CounterexampleSpec)
    kind: str = ""
    trials: int = _DEFAULT_TRIALS
    master_seed: int = _DEFAULT_MASTER_SEED
    output: Optional[Path] = None
    threads: int = 1
    record_runtime: bool = False
    timestamp: bool = True
    source: Optional[Path] = None


# ---------------------------------------------------------------------------
# Säuberung einzelner Werte
# ---------------------------------------------------------------------------


def _sanitize_choice(value: Any, allowed: Tuple[str, ...], default: str, name: str) -> str:
    """Reduziert Eingaben auf bekannte Kennwörter; fehlende Werte → Vorgabe."""

    if value is None:
        return default
    cleaned = str(value).strip()
    if cleaned not in allowed:
        lowered = cleaned.lower()
        matches = [a for a in allowed if a.lower() == lowered]
        if not matches:
            raise ConfigurationError(f"{name} = '{value}' unbekannt. Erlaubt: {', '.join(allowed)}")
        cleaned = matches[0]
    return cleaned


def _sanitize_int(value: Any, default: int, name: str, minimum: Optional[int] = None) -> int:
    if value is None:
        return default
    if isinstance(value, bool):
        raise ConfigurationError(f"{name} muss ganzzahlig sein, erhalten: {value!r}")
    try:
        number = int(value)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"{name} muss ganzzahlig sein, erhalten: {value!r}") from exc
    if number != value and not isinstance(value, str):
        raise ConfigurationError(f"{name} muss ganzzahlig sein, erhalten: {value!r}")
    if minimum is not None and number < minimum:
        raise ConfigurationError(f"{name} muss ≥ {minimum} sein, erhalten: {number}")
    return number


def _sanitize_float(value: Any, default: float, name: str, *, unit_interval: bool = False) -> float:
    if value is None:
        return default
    try:
        number = float(value)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"{name} muss eine Zahl sein, erhalten: {value!r}") from exc
    if unit_interval and not 0.0 < number < 1.0:
        raise ConfigurationError(f"{name} muss in (0,1) liegen, erhalten: {number}")
    if not unit_interval and not number > 0.0:
        raise ConfigurationError(f"{name} muss positiv sein, erhalten: {number}")
    return number


def _sanitize_int_list(value: Any, name: str, minimum: int = 0) -> Tuple[int, ...]:
    if value is None:
        return ()
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        value = [value]
    try:
        items = tuple(_sanitize_int(v, 0, name, minimum) for v in value)
    except TypeError as exc:
        raise ConfigurationError(f"{name} muss eine Liste ganzer Zahlen sein") from exc
    return items


def _sanitize_bool(value: Any, default: bool) -> bool:
    if value is None:
        return default
    if isinstance(value, str):
        return value.strip().lower() in {"1", "true", "ja", "yes", "on"}
    return bool(value)


def _path(value: Any, base_dir: Optional[Path]) -> Optional[Path]:
    if value in (None, ""):
        return None
    path = Path(str(value))
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    return path


def _section(data: Mapping[str, Any], key: str) -> Mapping[str, Any]:
    section = data.get(key, {})
    if not isinstance(section, Mapping):
        raise ConfigurationError(f"Abschnitt [{key}] muss eine Tabelle sein")
    return section


# ---------------------------------------------------------------------------
# Laden
# ---------------------------------------------------------------------------


def config_from_mapping(data: Mapping[str, Any], base_dir: Optional[Path] = None) -> ExperimentConfig:
    """Baut die Konfiguration aus einem (TOML-)Wörterbuch."""

    experiment = _section(data, "experiment")
    group = _section(data, "group")
    rep = _section(data, "representation")
    basis = _section(data, "basis")
    sensing = _section(data, "sensing")
    grid = _section(data, "grid")
    solver = _section(data, "solver")
    bound = _section(data, "bound")
    constant = _section(data, "constant")
    counter = _section(data, "counterexample")

    blocks_raw = rep.get("blocks") or ()
    try:
        blocks = tuple((int(a), int(b)) for a, b in blocks_raw)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError("representation.blocks erwartet Paare [irrep, vielfachheit]") from exc

    C_const = bound.get("C_const")
    config = ExperimentConfig(
        group=GroupSpec(
            kind=_sanitize_choice(group.get("kind"), ("cyclic", "dihedral", "affine"), GROUP_CYCLIC, "group.kind"),
            param=_sanitize_int(group.get("param"), 8, "group.param", 1),
        ),
        representation=RepresentationSpec(
            realization=_sanitize_choice(rep.get("realization"), REALIZATIONS, "left_regular", "representation.realization"),
            degree=_sanitize_int(rep.get("degree"), 1, "representation.degree", 1),
            irrep=_sanitize_int(rep.get("irrep"), 0, "representation.irrep", 0),
            blocks=blocks,
            block_seed=_sanitize_int(rep.get("block_seed"), 0, "representation.block_seed", 0),
            regular=_sanitize_bool(rep.get("regular"), False),
            subgroup=_sanitize_int_list(rep.get("subgroup"), "representation.subgroup"),
            sigma=str(rep.get("sigma", "trivial")).strip(),
            cross_section=_sanitize_int_list(rep.get("cross_section"), "representation.cross_section"),
            matrix_file=_path(rep.get("matrix_file"), base_dir),
            conjugate=_sanitize_choice(rep.get("conjugate"), CONJUGATIONS, "none", "representation.conjugate"),
            conjugate_file=_path(rep.get("conjugate_file"), base_dir),
        ),
        basis=BasisSpec(
            kind=_sanitize_choice(basis.get("kind"), BASES, "identity", "basis.kind"),
            path=_path(basis.get("path"), base_dir),
        ),
        sensing=SensingSpec(
            xi_scheme=_sanitize_choice(sensing.get("xi_scheme"), XI_SCHEMES, SCHEME_GAUSSIAN, "sensing.xi_scheme"),
            omega_mode=_sanitize_choice(sensing.get("omega_mode"), OMEGA_MODES, OMEGA_FIXED, "sensing.omega_mode"),
            subgroup=_sanitize_int_list(sensing.get("subgroup"), "sensing.subgroup"),
            signal=_sanitize_choice(sensing.get("signal"), (SIGNAL_RANDOM, SIGNAL_COUNTEREXAMPLE), SIGNAL_RANDOM, "sensing.signal"),
        ),
        grid=GridSpec(
            n=_sanitize_int_list(grid.get("n"), "grid.n", 1),
            s=_sanitize_int_list(grid.get("s", [1]), "grid.s", 1) or (1,),
            m=_sanitize_int_list(grid.get("m"), "grid.m", 1),
        ),
        solver=SolverSpec(
            name=_sanitize_choice(solver.get("name"), SOLVERS, SOLVER_BP, "solver.name"),
            tol_feas=_sanitize_float(solver.get("tol_feas"), DEFAULT_TOL_FEAS, "solver.tol_feas"),
            tol_opt=_sanitize_float(solver.get("tol_opt"), DEFAULT_TOL_OPT, "solver.tol_opt"),
            max_iter=_sanitize_int(solver.get("max_iter"), DEFAULT_MAX_ITER, "solver.max_iter", 1),
        ),
        bound=BoundSpec(
            delta=_sanitize_float(bound.get("delta"), _DEFAULT_DELTA, "bound.delta", unit_interval=True),
            eta=_sanitize_float(bound.get("eta"), _DEFAULT_ETA, "bound.eta", unit_interval=True),
            c=_sanitize_float(bound.get("c"), 1.0, "bound.c"),
            C=_sanitize_float(bound.get("C"), 1.0, "bound.C"),
            C_const=None if C_const is None else _sanitize_float(C_const, 1.0, "bound.C_const"),
        ),
        constant=ConstantSpec(
            family=_sanitize_choice(constant.get("family"), FAMILIES, "sampled", "constant.family"),
            samples=_sanitize_int(constant.get("samples"), _DEFAULT_SAMPLES, "constant.samples", 1),
            m=None if constant.get("m") is None else _sanitize_int(constant.get("m"), 1, "constant.m", 1),
        ),
        counterexample=CounterexampleSpec(
            n=_sanitize_int(counter.get("n"), 8, "counterexample.n", 2),
            s=_sanitize_int(counter.get("s"), 2, "counterexample.s", 1),
        ),
        kind=str(experiment.get("kind", "")).strip(),
        trials=_sanitize_int(experiment.get("trials"), _DEFAULT_TRIALS, "experiment.trials", 1),
        master_seed=_sanitize_int(experiment.get("master_seed"), _DEFAULT_MASTER_SEED, "experiment.master_seed", 0),
        output=_path(experiment.get("output"), base_dir),
        threads=_sanitize_int(experiment.get("threads"), 1, "experiment.threads", 1),
        record_runtime=_sanitize_bool(experiment.get("record_runtime"), False),
        timestamp=_sanitize_bool(experiment.get("timestamp"), True),
    )
    return config


def load_config(path: str | Path) -> ExperimentConfig:
    path = Path(path)
    try:
        with path.open("rb") as handle:
            data = tomllib.load(handle)
    except OSError as exc:
        raise ConfigurationError(f"Konfiguration '{path}' nicht lesbar: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f"Konfiguration '{path}' ist kein gültiges TOML: {exc}") from exc
    config = config_from_mapping(data, base_dir=path.parent)
    logger.info("Konfiguration %s geladen", path)
    return replace(config, source=path)


def with_overrides(
    config: ExperimentConfig,
    *,
    seed: Optional[int] = None,
    output: Optional[str | Path] = None,
    threads: Optional[int] = None,
    timestamp: Optional[bool] = None,
) -> ExperimentConfig:
    """Übernimmt CLI-Flags in die Konfiguration."""

    changes: Dict[str, Any] = {}
    if seed is not None:
        changes["master_seed"] = _sanitize_int(seed, 0, "--seed", 0)
    if output is not None:
        changes["output"] = Path(output)
    if threads is not None:
        changes["threads"] = _sanitize_int(threads, 1, "--threads", 1)
    if timestamp is not None:
        changes["timestamp"] = bool(timestamp)
    return replace(config, **changes) if changes else config


# ---------------------------------------------------------------------------
# Auflösen der Deskriptoren
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ResolvedRepresentation:
    """Darstellung samt Blockstruktur vor einem Basiswechsel und Zerlegung.

    ``transform`` ist das V aus ρ = VπV*, falls konjugiert wurde.
    """

    rep: Representation
    source_block: Optional[BlockStructure] = None
    partition: Optional[CosetPartition] = None
    transform: Optional[np.ndarray] = None


def resolve_group(config: ExperimentConfig) -> FiniteGroup:
    try:
        return build_group(config.group.kind, config.group.param)
    except OrbitSensingError as exc:
        raise ConfigurationError(f"Gruppe nicht auflösbar: {exc}") from exc


def _sigma(spec: RepresentationSpec, H: FiniteGroup) -> Representation:
    if spec.sigma == "trivial":
        return trivial_rep(H, 1)
    if spec.sigma.startswith("character:"):
        index = _sanitize_int(spec.sigma.split(":", 1)[1], 0, "representation.sigma", 0)
        characters = subgroup_characters(H)
        if index >= len(characters):
            raise ConfigurationError(f"Charakter {index} existiert nicht (|H| = {H.order})")
        return characters[index]
    if spec.sigma == "regular":
        return left_regular(H)
    raise ConfigurationError(f"representation.sigma = '{spec.sigma}' unbekannt")


def _base_representation(config: ExperimentConfig, G: FiniteGroup) -> ResolvedRepresentation:
    spec = config.representation
    realization = spec.realization
    if realization == "left_regular":
        return ResolvedRepresentation(left_regular(G))
    if realization == "trivial":
        return ResolvedRepresentation(trivial_rep(G, spec.degree))
    if realization == "irreducible":
        catalog = irreducible_reps(G)
        if spec.irrep >= len(catalog):
            raise ConfigurationError(f"Irreduzible Nummer {spec.irrep} existiert nicht ({len(catalog)} im Katalog)")
        return ResolvedRepresentation(catalog[spec.irrep])
    if realization == "affine":
        return ResolvedRepresentation(affine_rep(G.param, G))
    if realization == "diagonal_character":
        rep = diagonal_character_rep(G)
        return ResolvedRepresentation(rep, rep.block)
    if realization == "block_diagonal":
        catalog = irreducible_reps(G)
        try:
            blocks = [(catalog[i], m) for i, m in spec.blocks]
        except IndexError as exc:
            raise ConfigurationError("representation.blocks verweist auf eine unbekannte Irreduzible") from exc
        rep = block_diagonal(blocks)
        return ResolvedRepresentation(rep, rep.block)
    if realization == "random_block_diagonal":
        rep = random_block_diagonal(G, spec.degree, make_rng(spec.block_seed), regular=spec.regular)
        return ResolvedRepresentation(rep, rep.block)
    if realization == "induced":
        if not spec.subgroup:
            raise ConfigurationError("Induzierte Darstellung braucht representation.subgroup")
        P = coset_partition(G, spec.subgroup)
        H = subgroup_group(G, spec.subgroup)
        gamma = cross_section(P, spec.cross_section) if spec.cross_section else None
        return ResolvedRepresentation(induce(P, _sigma(spec, H), gamma), partition=P)
    if realization == "matrix_file":
        if spec.matrix_file is None:
            raise ConfigurationError("representation.matrix_file fehlt")
        matrices = np.stack(read_matrix_stack(spec.matrix_file))
        return ResolvedRepresentation(representation_from_matrices(G, matrices))
    raise ConfigurationError(f"Realisierung '{realization}' unbekannt")  # pragma: no cover


def resolve_representation(config: ExperimentConfig, G: Optional[FiniteGroup] = None) -> ResolvedRepresentation:
    """Baut die konfigurierte Darstellung und wendet den Basiswechsel an."""

    G = G if G is not None else resolve_group(config)
    try:
        resolved = _base_representation(config, G)
        conjugate = config.representation.conjugate
        if conjugate == "none":
            return resolved
        rep = resolved.rep
        if conjugate == "dft":
            if rep.realization == "left_regular" and G.kind == GROUP_CYCLIC:
                V = cyclic_fourier_matrix(G)
            else:
                V = dft_matrix(rep.degree)
            new = conjugate_rep(rep, V, f"{rep.realization}+dft")
        elif conjugate == "U":
            if resolved.source_block is None:
                raise ConfigurationError("Konjugation mit U braucht eine blockdiagonale Darstellung")
            V = realization_transform_U(resolved.source_block)
            new = conjugate_rep(rep, V, f"{rep.realization}+U")
        else:
            if config.representation.conjugate_file is None:
                raise ConfigurationError("representation.conjugate_file fehlt")
            V = read_complex_matrix(config.representation.conjugate_file)
            new = conjugate_rep(rep, V, f"{rep.realization}+file")
        return ResolvedRepresentation(new, resolved.source_block, resolved.partition, V)
    except ConfigurationError:
        raise
    except OrbitSensingError as exc:
        raise ConfigurationError(f"Darstellung nicht auflösbar: {exc}") from exc


def resolve_basis_spec(config: ExperimentConfig, n: int) -> str | np.ndarray:
    kind = config.basis.kind
    if kind in ("identity", "dft"):
        return kind
    if config.basis.path is None:
        raise ConfigurationError("basis.path fehlt für basis.kind = 'file'")
    B = read_complex_matrix(config.basis.path)
    if B.shape != (n, n):
        raise ConfigurationError(f"Basis aus '{config.basis.path}' hat Form {B.shape}, erwartet ({n}, {n})")
    return B


def provenance(config: ExperimentConfig, rep: Optional[Representation] = None) -> Dict[str, Any]:
    """Provenienzspalten für jede CSV-Zeile."""

    return {
        "group": f"{config.group.kind}({config.group.param})",
        "realization": rep.realization if rep is not None else config.representation.realization,
        "conjugate": config.representation.conjugate,
        "basis": config.basis.kind,
        "xi_scheme": config.sensing.xi_scheme,
        "omega_mode": config.sensing.omega_mode,
        "master_seed": config.master_seed,
        "solver": config.solver.name,
        "tol_feas": config.solver.tol_feas,
        "tol_opt": config.solver.tol_opt,
    }
