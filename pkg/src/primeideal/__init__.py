"""Deterministic prime and prime-power tests for ideals of finite-rank orders."""

__version__ = "0.1.0"
