"""Fester Ω: selbst n − n/s Messungen genügen nicht für s-dünne Signale."""

import streamlit as st

from experimentmodul import cmd_counterexample
from module.ergebnis_ansicht import fehler_als_hinweis, zeige_ergebnis
from module.footer import status_footer
from module.sidebar import show_sidebar

status_footer()
show_sidebar()

st.subheader("⚠️ Gegenbeispiel")
st.markdown(
    "Diagonale Charakterdarstellung auf Z/n mit Ω = {k : k ≢ 0 mod s}. "
    "Das gepflanzte Signal liegt im Kern von Φ, Basis Pursuit findet stattdessen 0."
)

config = st.session_state.get("experiment_config")
links, rechts = st.columns(2)
n = links.number_input("n", min_value=2, value=8)
s = rechts.number_input("s (teilt n)", min_value=2, value=2)
seed = config.master_seed if config is not None else 0

if st.button("Gegenbeispiel konstruieren", type="primary"):
    with fehler_als_hinweis():
        report = cmd_counterexample(int(n), int(s), seed=seed)
        st.code(report.render(), language=None)
        zeige_ergebnis(report.to_frame(), "gegenbeispiel")
