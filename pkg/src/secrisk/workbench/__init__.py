"""Scenario documents, reports, comparison, the run store, and the CLI."""
