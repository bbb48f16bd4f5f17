"""Uniform verification output: one named inequality, two sides, a slack."""

from __future__ import annotations

from dataclasses import dataclass

# Inequality verdicts use tol = TOL_COEFF * (1 + |lhs|) unless overridden.
TOL_COEFF = 1e-9


def default_tol(lhs: float) -> float:
    return TOL_COEFF * (1.0 + abs(lhs))


@dataclass(frozen=True)
class SlackReport:
    """Outcome of checking one inequality.

    `slack` is oriented so that slack >= 0 means the inequality holds;
    `holds` applies the tolerance.
    """

    inequality: str
    lhs: float
    rhs: float
    slack: float
    tol: float

    @property
    def holds(self) -> bool:
        return self.slack >= -self.tol
