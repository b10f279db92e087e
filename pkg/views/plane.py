"""Warmth/competence plane: group means and survey agreement."""

import streamlit as st

from components.display import cached_json, cached_table, metric_cards, output_dir, page_header, show_artifact_table
from components.plots import scatter_figure
from storage import store


def _kept_table(group):
    return [
        {"word": k["word"], "count": k["count"], "distance": round(k["distance"], 4)}
        for k in group.get("kept", [])
    ]


def render():
    directory = output_dir()
    page_header("🧭", "Warmth–Competence Plane", "Group means projected onto the polar axes")

    payload = cached_json(str(directory), store.CLUSTERS_JSON)
    if not payload:
        st.info("No clusters yet (`python cli.py cluster`).")
        return

    groups = payload.get("groups", [])
    points = [(g["target"], g["warmth"], g["competence"]) for g in groups]
    st.plotly_chart(
        scatter_figure(points, title=f"{payload.get('side', 'stereotype')} clusters"),
        use_container_width=True,
        key="plane_scatter",
    )

    predictions = cached_table(str(directory), store.PREDICTIONS_CSV)
    if predictions:
        matches = sum(1 for r in predictions if r.get("match") == "true")
        metric_cards([
            ("PREDICTED GROUPS", str(len(predictions)), "#1e40af"),
            ("IN PREDICTED QUADRANT", str(matches), "#16a34a"),
            ("AGREEMENT", f"{100.0 * matches / len(predictions):.0f}%", "#d97706"),
        ])
        st.markdown("")
        show_artifact_table(directory, store.PREDICTIONS_CSV, key="predictions")

    st.markdown("#### Groups")
    show_artifact_table(directory, store.CLUSTERS_CSV, key="clusters")

    names = [g["target"] for g in groups]
    if not names:
        return
    chosen = st.selectbox("Inspect group", names, key="plane_group")
    group = next(g for g in groups if g["target"] == chosen)
    c1, c2 = st.columns(2)
    with c1:
        st.markdown("**Kept words** (closest to the mean first)")
        st.dataframe(_kept_table(group), use_container_width=True, hide_index=True)
    with c2:
        for label, key in (("Outliers", "discarded_outliers"),
                           ("Demographic", "discarded_demographic"),
                           ("No vector", "unresolved")):
            words = group.get(key, [])
            st.markdown(f"**{label}** ({len(words)})")
            st.write(", ".join(words) if words else "—")
