"""Hilfsfunktionen für die Navigation zwischen den Streamlit-Seiten."""

import streamlit as st

from module.experiment_config import ExperimentConfig


def redirect_to_start_page(warning_message: str | None = None) -> None:
    """Leitet auf die Konfigurationsseite um und hinterlegt optional eine Warnmeldung."""

    if warning_message:
        st.session_state["start_warning"] = warning_message
    # st.switch_page bricht die aktuelle Seite ab
    st.switch_page("Orbit_Sensing.py")


def require_config() -> ExperimentConfig:
    """Liefert die übernommene Konfiguration oder kehrt zur Startseite zurück."""

    config = st.session_state.get("experiment_config")
    if not isinstance(config, ExperimentConfig):
        redirect_to_start_page("⚠️ Bitte zuerst eine Konfiguration übernehmen.")
    return config
