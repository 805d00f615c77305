"""Messschranken neben n; Schranken über n sind leer (vacuous)."""

import streamlit as st

from experimentmodul import cmd_bound
from module.ergebnis_ansicht import fehler_als_hinweis, zeige_ergebnis
from module.footer import status_footer
from module.navigation import require_config
from module.sidebar import show_sidebar

status_footer()
show_sidebar()
config = require_config()

st.subheader("📏 Messschranken")
st.caption(f"δ = {config.bound.delta}, η = {config.bound.eta}; C aus der Konfiguration oder bei Ω = G berechnet.")

if st.button("Schranken auswerten", type="primary"):
    with fehler_als_hinweis():
        tabelle = cmd_bound(config)
        if tabelle["thm1_vacuous"].any():
            st.info("Mindestens eine Schranke übersteigt n und ist damit leer.")
        zeige_ergebnis(tabelle, "schranken")
