"""Overview page: run manifest and lexicon validation."""

import streamlit as st

from components.display import cached_json, metric_cards, output_dir, page_header, show_artifact_table
from storage import store


def _run_summary(name, run):
    counts = run.get("counts", {})
    with st.expander(f"`{name}` · config {run.get('config_hash', '')[:12]}", expanded=False):
        st.markdown("**Counts**")
        st.json(counts)
        inputs = run.get("inputs", {})
        if inputs:
            st.markdown("**Input checksums (sha256)**")
            st.dataframe(
                [{"input": k, "sha256": v} for k, v in inputs.items()],
                use_container_width=True,
                hide_index=True,
            )


def render():
    directory = output_dir()
    page_header("🏠", "Overview", f"Artifacts in `{directory}`")

    manifest = cached_json(str(directory), store.MANIFEST_NAME) or {}
    runs = manifest.get("runs", {})
    if not runs:
        st.warning(
            f"No manifest found in `{directory}`. Run e.g. `python cli.py cluster ... -o {directory}` first, "
            "or point `SCM_OUTPUT_DIR` in `.streamlit/secrets.toml` at an artifact directory."
        )
        return

    metric_cards([
        ("VERSION", manifest.get("version", "—"), "#1e40af"),
        ("RUNS", str(len(runs)), "#1e40af"),
        ("SUBCOMMANDS", ", ".join(sorted(runs)), "#16a34a"),
    ])
    st.markdown("")

    st.markdown("#### Lexicon validation")
    rows = show_artifact_table(
        directory, store.VALIDATION_CSV, key="validation",
        missing_hint="No validation run yet (`python cli.py validate`).",
    )
    if rows:
        report = cached_json(str(directory), store.VALIDATION_JSON) or {}
        for model in report.get("models", []):
            facets = model.get("per_facet", {})
            if facets:
                st.caption(
                    f"{model.get('model') or 'model'} per facet: "
                    + ", ".join(f"{k} {v:.1f}%" for k, v in sorted(facets.items()))
                )

    st.markdown("#### Runs")
    for name in sorted(runs):
        _run_summary(name, runs[name])
