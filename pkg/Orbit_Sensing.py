"""Startseite der Orbit-Sensing-Oberfläche.

Hier wird die Experimentkonfiguration zusammengestellt, entweder per
TOML-Upload oder über die Formularfelder. Die Unterseiten (Verifikation,
Konstanten, RIP, Phasenübergang, Schranken) lesen sie aus dem Session-State.
"""

from __future__ import annotations

import sys
import tempfile

import streamlit as st

from module.experiment_config import CONJUGATIONS, FAMILIES, REALIZATIONS, config_from_mapping
from module.fehler import ConfigurationError
from module.footer import status_footer
from module.matrix_io import store_uploaded_matrix
from module.protokoll import configure_logging
from module.rekonstruktion import SOLVERS
from module.sensing import OMEGA_MODES, XI_SCHEMES
from module.sidebar import show_sidebar

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

configure_logging()

# ---------------------------------------------------------------------------
# Initialisierung
# ---------------------------------------------------------------------------

STANDARD_KONFIGURATION = {
    "experiment": {"master_seed": 0, "trials": 5, "threads": 1},
    "group": {"kind": "cyclic", "param": 8},
    "representation": {"realization": "left_regular", "conjugate": "none"},
    "basis": {"kind": "identity"},
    "sensing": {"xi_scheme": "complex_gaussian", "omega_mode": "fixed_set", "signal": "random"},
    "grid": {"s": [1, 2], "m": [4, 8]},
    "solver": {"name": "basis_pursuit"},
    "bound": {"delta": 0.5, "eta": 0.01},
    "constant": {"family": "sampled", "samples": 50},
}


def _int_liste(text: str) -> list[int]:
    return [int(v) for v in text.replace(",", " ").split()]


def _uebernehmen(mapping: dict) -> None:
    try:
        config = config_from_mapping(mapping)
    except ConfigurationError as exc:
        st.error(f"⚠️ {exc}")
        return
    st.session_state["experiment_mapping"] = mapping
    st.session_state["experiment_config"] = config
    st.success("Konfiguration übernommen.")


st.title("Compressed Sensing mit Gruppenorbits")

warnung = st.session_state.pop("start_warning", None)
if warnung:
    st.warning(warnung)

st.markdown(
    "Messungen ⟨x, π(g)ξ⟩ für g aus einer Stichprobe Ω einer endlichen Gruppe. "
    "Die Seiten links prüfen Invarianten, tabellieren Konstanten und messen Erfolgsquoten."
)

hochgeladen = st.file_uploader("TOML-Konfiguration laden", type=["toml"])
if hochgeladen is not None and st.button("Datei übernehmen"):
    try:
        _uebernehmen(tomllib.loads(hochgeladen.getvalue().decode("utf-8")))
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
        st.error(f"⚠️ Datei ist kein gültiges TOML: {exc}")

aktuell = st.session_state.get("experiment_mapping", STANDARD_KONFIGURATION)

with st.form(key="konfiguration"):
    st.markdown("#### Gruppe und Darstellung")
    links, rechts = st.columns(2)
    kinds = ["cyclic", "dihedral", "affine"]
    kind = links.selectbox("Gruppe", kinds, index=kinds.index(aktuell.get("group", {}).get("kind", "cyclic")))
    param = links.number_input("Parameter (n bzw. p)", min_value=1, value=int(aktuell.get("group", {}).get("param", 8)))
    realization = rechts.selectbox(
        "Realisierung",
        REALIZATIONS,
        index=REALIZATIONS.index(aktuell.get("representation", {}).get("realization", "left_regular")),
    )
    conjugate = rechts.selectbox("Basiswechsel", CONJUGATIONS)
    conjugate_upload = rechts.file_uploader(
        "Unitäre Matrix V für Basiswechsel 'file'",
        type=["txt"],
        help="Textformat wie bei Matrixdateien: Kopfzeile 'zeilen spalten', danach Real- und Imaginärteil im Wechsel.",
    )
    degree = rechts.number_input("Grad (trivial / zufällig blockdiagonal)", min_value=1, value=int(aktuell.get("representation", {}).get("degree", 1)))
    irrep = rechts.number_input("Nummer der Irreduziblen", min_value=0, value=int(aktuell.get("representation", {}).get("irrep", 0)))
    block_seed = rechts.number_input("Seed der zufälligen Blöcke", min_value=0, value=int(aktuell.get("representation", {}).get("block_seed", 0)))
    regular = rechts.checkbox(
        "Vielfachheit ≤ Grad (strukturiertes ξ möglich)",
        value=bool(aktuell.get("representation", {}).get("regular", False)),
    )
    subgroup = links.text_input("Untergruppe H (Indizes, für induced / coset_admissible)", "")

    st.markdown("#### Messung")
    links, rechts = st.columns(2)
    xi_scheme = links.selectbox("ξ-Schema", XI_SCHEMES)
    omega_mode = links.selectbox("Ω-Modus", OMEGA_MODES)
    signal = links.selectbox("Signal", ["random", "counterexample"])
    basis = rechts.selectbox("Basis B", ["identity", "dft"])
    solver = rechts.selectbox("Löser", SOLVERS)
    family = rechts.selectbox("Ω-Familie (Konstanten)", FAMILIES, index=FAMILIES.index("sampled"))

    st.markdown("#### Raster und Wiederholungen")
    links, rechts = st.columns(2)
    s_text = links.text_input("s-Werte", " ".join(str(v) for v in aktuell.get("grid", {}).get("s", [1])))
    m_text = links.text_input("m-Werte", " ".join(str(v) for v in aktuell.get("grid", {}).get("m", [])))
    trials = rechts.number_input("Versuche je Zelle", min_value=1, value=int(aktuell.get("experiment", {}).get("trials", 5)))
    seed = rechts.number_input("Master-Seed", min_value=0, value=int(aktuell.get("experiment", {}).get("master_seed", 0)))
    threads = rechts.number_input("Threads", min_value=1, value=int(aktuell.get("experiment", {}).get("threads", 1)))
    abgeschickt = st.form_submit_button("Konfiguration übernehmen")

if abgeschickt:
    try:
        mapping = {
            "experiment": {"master_seed": int(seed), "trials": int(trials), "threads": int(threads)},
            "group": {"kind": kind, "param": int(param)},
            "representation": {
                "realization": realization,
                "conjugate": conjugate,
                "degree": int(degree),
                "irrep": int(irrep),
                "block_seed": int(block_seed),
                "regular": bool(regular),
                "subgroup": _int_liste(subgroup),
            },
            "basis": {"kind": basis},
            "sensing": {
                "xi_scheme": xi_scheme,
                "omega_mode": omega_mode,
                "signal": signal,
                "subgroup": _int_liste(subgroup) if omega_mode == "coset_admissible" else [],
            },
            "grid": {"s": _int_liste(s_text), "m": _int_liste(m_text)},
            "solver": {"name": solver},
            "bound": STANDARD_KONFIGURATION["bound"],
            "constant": {"family": family, "samples": 50},
        }
        if conjugate == "file":
            if conjugate_upload is None:
                raise ConfigurationError("Basiswechsel 'file' braucht eine hochgeladene Matrix V")
            ablage = st.session_state.setdefault("upload_dir", tempfile.mkdtemp(prefix="orbit_sensing_"))
            pfad = store_uploaded_matrix(conjugate_upload.getvalue(), ablage, conjugate_upload.name)
            mapping["representation"]["conjugate_file"] = str(pfad)
    except ConfigurationError as exc:
        st.error(f"⚠️ {exc}")
    except ValueError:
        st.error("⚠️ Raster und Untergruppe erwarten ganze Zahlen, getrennt durch Leerzeichen.")
    else:
        _uebernehmen(mapping)

status_footer()
show_sidebar()
