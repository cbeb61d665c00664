"""Serialisation of windows, start modules and seeds (JSON, DOT, CSV, text)."""
