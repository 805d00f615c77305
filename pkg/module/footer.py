"""Fußzeile mit dem Reproduzierbarkeitsstatus der aktuellen Konfiguration."""

import streamlit as st

from module.experiment_config import ExperimentConfig

_STIL = """
<style>
.orbit-fuss {
    position: fixed;
    inset: auto 0 0 0;
    display: flex;
    justify-content: space-between;
    gap: 1rem;
    padding: 4px 16px;
    font-size: 0.8em;
    background: #fafafa;
    border-top: 1px solid #e0e0e0;
    color: #555;
    z-index: 100;
}
.orbit-fuss .seed { font-family: monospace; color: #1f618d; }
.orbit-fuss .vorgabe { font-style: italic; }
</style>
"""


def _status(config: ExperimentConfig | None) -> str:
    if config is None:
        return "<span class='vorgabe'>keine Konfiguration übernommen</span>"
    return (
        f"{config.group.kind}({config.group.param}) · {config.representation.realization} · "
        f"<span class='seed'>seed={config.master_seed}</span> · threads={config.threads}"
    )


def status_footer() -> None:
    """Gleicher Seed und gleiche Konfiguration ergeben identische CSV-Dateien."""

    config = st.session_state.get("experiment_config")
    st.markdown(
        _STIL
        + "<div class='orbit-fuss'><span>Orbit-Sensing</span>"
        + f"<span>{_status(config)}</span></div>",
        unsafe_allow_html=True,
    )
