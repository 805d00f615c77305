"""Orbit-Spaltenkonstante über die konfigurierte Ω-Familie."""

import streamlit as st

from experimentmodul import cmd_constant
from module.ergebnis_ansicht import fehler_als_hinweis, zeige_ergebnis
from module.footer import status_footer
from module.navigation import require_config
from module.sidebar import show_sidebar

status_footer()
show_sidebar()
config = require_config()

st.subheader("📐 Orbit-Spaltenkonstante")
st.caption(
    f"Familie: {config.constant.family}. Bekannte Schranken erscheinen in der Spalte "
    "'bound' (1, |Ω|, |G|/d, |Ω₁| oder die Blockformel)."
)

if st.button("Konstanten berechnen", type="primary"):
    with fehler_als_hinweis():
        with st.spinner("Konstanten werden berechnet..."):
            tabelle = cmd_constant(config)
        if not tabelle.empty and tabelle["bound_holds"].eq(False).any():
            st.warning("Mindestens eine Zeile verletzt die bekannte Schranke.")
        zeige_ergebnis(tabelle, "konstanten")
