"""Reusable display helpers for the artifact viewer."""

import os
from pathlib import Path

import streamlit as st

from storage import store


def output_dir() -> Path:
    """Artifact directory from st.secrets, else the CLI's environment variable."""
    try:
        value = st.secrets.get("SCM_OUTPUT_DIR")
    except FileNotFoundError:
        value = None
    return Path(value or os.environ.get("SCM_OUTPUT_DIR", "output"))


@st.cache_data(ttl=60, show_spinner=False)
def cached_table(directory: str, name: str):
    return store.load_table(directory, name)


@st.cache_data(ttl=60, show_spinner=False)
def cached_json(directory: str, name: str):
    return store.load_json(directory, name)


def page_header(icon: str, title: str, subtitle: str):
    """Render a standard page header with icon, title, and subtitle."""
    st.markdown(
        f"""
        <div class="page-header">
            <div class="page-header-left">
                <span class="page-icon">{icon}</span>
                <div>
                    <p class="page-title">{title}</p>
                    <p class="page-subtitle">{subtitle}</p>
                </div>
            </div>
        </div>
        """,
        unsafe_allow_html=True,
    )


def metric_cards(items):
    """items: (label, value, color) triples, one column each."""
    cols = st.columns(len(items))
    for col, (label, value, color) in zip(cols, items):
        with col:
            st.markdown(
                f'<div class="metric-card">'
                f'<p class="metric-label">{label}</p>'
                f'<p class="metric-value" style="color:{color}; font-size:1rem;">{value}</p>'
                f"</div>",
                unsafe_allow_html=True,
            )


def show_artifact_table(directory: Path, name: str, key: str, missing_hint: str = ""):
    """Table from a CSV artifact plus a download button; returns the rows."""
    rows = cached_table(str(directory), name)
    if not rows:
        st.info(missing_hint or f"`{name}` not found in `{directory}`.")
        return []
    st.dataframe(rows, use_container_width=True, hide_index=True)
    data = (directory / name).read_bytes() if (directory / name).is_file() else b""
    st.download_button(
        f"📥 Download {name}",
        data=data,
        file_name=name,
        mime="text/csv",
        key=f"dl_{key}",
    )
    return rows
