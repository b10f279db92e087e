"""Counter-stereotype suggestions."""

from collections import Counter

import streamlit as st

from components.display import metric_cards, output_dir, page_header, show_artifact_table
from storage import store

STATUS_COLORS = {
    "ok": "#16a34a",
    "unchecked_antonym": "#d97706",
    "not_ambivalent": "#64748b",
    "no_antonym": "#dc2626",
    "degenerate": "#dc2626",
}


def render():
    directory = output_dir()
    page_header("✳️", "Counter-stereotypes", "Keep the positive aspect, replace the negative one by its antonym")

    rows = show_artifact_table(
        directory, store.COUNTERS_CSV, key="counters",
        missing_hint="No counters yet (`python cli.py counter`).",
    )
    if not rows:
        return
    tally = Counter(r.get("status", "") for r in rows)
    metric_cards([(s.upper(), str(n), STATUS_COLORS.get(s, "#1e40af")) for s, n in sorted(tally.items())])
    if tally.get("not_ambivalent"):
        st.caption(
            "Groups that are high or low on both dimensions may not need a counter-stereotype; "
            "a direct antonym can be the better choice there."
        )
