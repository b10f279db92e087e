"""Anti-stereotype strategy tables."""

import streamlit as st

from components.display import cached_json, output_dir, page_header, show_artifact_table
from storage import store


def render():
    directory = output_dir()
    page_header("🔀", "Strategies", "How anti-stereotypes relate to their stereotypes")

    st.markdown("#### Word pairs")
    st.caption("Columns are keyed by the stereotype word's quadrant and salient dimension.")
    show_artifact_table(
        directory, store.STRATEGIES_CSV, key="strategies_pairs",
        missing_hint="No strategy run yet (`python cli.py strategies`).",
    )

    st.markdown("#### Group means")
    show_artifact_table(directory, store.STRATEGIES_GROUPS_CSV, key="strategies_groups")

    payload = cached_json(str(directory), store.STRATEGIES_JSON) or {}
    groups = payload.get("groups", [])
    if groups:
        with st.expander(f"Representatives ({len(groups)} groups)", expanded=False):
            st.dataframe(groups, use_container_width=True, hide_index=True)
    skipped = payload.get("skipped_groups", [])
    if skipped:
        st.warning(f"Groups without both clusters: {', '.join(skipped)}")
