"""Erfolgsquote der Rekonstruktion über das (s, m)-Raster."""

import streamlit as st

from experimentmodul import cmd_phase_transition
from module.ergebnis_ansicht import fehler_als_hinweis, zeige_ergebnis
from module.footer import status_footer
from module.loading_indicator import grid_labels, task_spinner
from module.navigation import require_config
from module.sidebar import show_sidebar

status_footer()
show_sidebar()
config = require_config()

st.subheader("📈 Phasenübergang")
st.caption(
    f"{config.trials} Versuche je Zelle, Löser {config.solver.name}, Erfolg bei relativem Fehler ≤ 1e−4."
)

if st.button("Raster starten", type="primary"):
    zellen = grid_labels(config.grid.s, config.grid.m or ("|G|",))
    with fehler_als_hinweis():
        with task_spinner("Versuche laufen...", zellen) as anzeige:
            tabelle = cmd_phase_transition(config, on_cell=anzeige.advance)
        if not tabelle.empty:
            st.line_chart(tabelle.pivot_table(index="m", columns="s", values="success_rate"))
        zeige_ergebnis(tabelle, "phasenuebergang")
