"""Shared exception types, mapped to distinct CLI exit codes."""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured codeword budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} codewords, budget is {budget}")
        self.required = required
        self.budget = budget


class NotNested(ValueError):
    """The nesting premise between the two classical codes does not hold."""


class InternalConsistencyError(RuntimeError):
    """Redundant computation routes disagreed; indicates an arithmetic bug."""
