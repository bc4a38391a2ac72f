"""Deterministic financial-workflow simulation and LLM benchmark engine."""

__version__ = "0.1.0"
