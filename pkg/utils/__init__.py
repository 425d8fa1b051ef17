"""Rendering, export, sampling and input-validation helpers."""
