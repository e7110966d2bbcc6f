"""Exporter test suite (package layout keeps conftest names distinct repo-wide)."""
