"""Warmth/competence analysis of stereotype word data."""

__version__ = "0.3.0"
