"""Exakte Restricted-Isometry-Konstanten durch Aufzählung aller Träger."""

import streamlit as st

from experimentmodul import cmd_rip
from module.analyse import RIP_RECOVERY_THRESHOLD
from module.ergebnis_ansicht import fehler_als_hinweis, zeige_ergebnis
from module.footer import status_footer
from module.loading_indicator import task_spinner
from module.navigation import require_config
from module.sidebar import show_sidebar

status_footer()
show_sidebar()
config = require_config()

st.subheader("🧮 RIP-Konstanten")
st.caption(f"δ_2s < {RIP_RECOVERY_THRESHOLD} garantiert Rekonstruktion s-dünner Signale durch Basis Pursuit.")

if st.button("δ_s berechnen", type="primary"):
    m_werte = config.grid.m or ("|G|",)
    with fehler_als_hinweis():
        with task_spinner("Träger werden aufgezählt...", [f"m = {m}" for m in m_werte]) as anzeige:
            tabelle = cmd_rip(config, on_cell=anzeige.advance)
        zeige_ergebnis(tabelle, "rip")
