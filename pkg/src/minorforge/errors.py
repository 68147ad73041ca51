"""Shared exception types."""

from __future__ import annotations


class BudgetError(RuntimeError):
    """Raised when an exact computation exceeds its configured resource budget."""

    def __init__(self, message: str, **details: object) -> None:
        super().__init__(message)
        self.details = details
