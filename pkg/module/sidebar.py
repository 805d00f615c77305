import streamlit as st


def show_sidebar():
    with st.sidebar:
        mapping = st.session_state.get("experiment_mapping")
        if mapping:
            group = mapping.get("group", {})
            rep = mapping.get("representation", {})
            seed = mapping.get("experiment", {}).get("master_seed", 0)
            st.markdown(f"**{group.get('kind', '?')}({group.get('param', '?')})**, {rep.get('realization', '?')}")
            if rep.get("conjugate", "none") != "none":
                st.caption(f"konjugiert mit {rep['conjugate']}")
            st.caption(f"Master-Seed {seed}")
        else:
            st.caption("Noch keine Konfiguration übernommen.")

        st.markdown("### Navigation")
        st.page_link("Orbit_Sensing.py", label="Konfiguration", icon="⚙️")

        # Die Auswertungen brauchen eine übernommene Konfiguration
        if "experiment_config" in st.session_state:
            st.page_link("pages/1_Verifikation.py", label="Verifikation", icon="✅")
            st.page_link("pages/2_Konstanten.py", label="Orbit-Konstanten", icon="📐")
            st.page_link("pages/3_RIP.py", label="RIP-Konstanten", icon="🧮")
            st.page_link("pages/5_Phasenuebergang.py", label="Phasenübergang", icon="📈")
            st.page_link("pages/6_Schranken.py", label="Messschranken", icon="📏")

        st.page_link("pages/4_Gegenbeispiel.py", label="Gegenbeispiel", icon="⚠️")

        st.markdown("---")
