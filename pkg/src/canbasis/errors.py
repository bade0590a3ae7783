"""Exceptions raised by the pipeline."""
from __future__ import annotations

from .laurent import NotLaurentError, ZeroDivisionInQv

__all__ = ["NotLaurentError", "ZeroDivisionInQv", "ZeroPivotError", "ResourceLimitError"]


class ZeroPivotError(ArithmeticError):
    """LDLT hit a zero pivot; the form is degenerate in the chosen order."""


class ResourceLimitError(RuntimeError):
    """A Weyl-group sum would exceed the configured number of summands."""
