"""Prüfsuite: Gruppenaxiome, Unitarität, Fourier-Identitäten und Blockeigenschaften."""

import streamlit as st

from experimentmodul import cmd_verify
from module.ergebnis_ansicht import fehler_als_hinweis, zeige_ergebnis
from module.footer import status_footer
from module.navigation import require_config
from module.sidebar import show_sidebar

status_footer()
show_sidebar()
config = require_config()

st.subheader("✅ Verifikation")
st.caption("Jede Prüfung wird einzeln ausgewertet; übersprungene Prüfungen gelten als bestanden.")

if st.button("Prüfungen starten", type="primary"):
    with fehler_als_hinweis():
        with st.spinner("Prüfungen laufen..."):
            report = cmd_verify(config)
        if report.passed:
            st.success("Alle Prüfungen bestanden.")
        else:
            st.error("Fehlgeschlagen: " + ", ".join(c.name for c in report.failed))
        zeige_ergebnis(report.to_frame(), "verifikation")
