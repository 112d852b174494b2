"""Numerical tolerances shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Absolute/relative thresholds used by equality, frame and rank tests.

    ``eq`` is an absolute per-coordinate bound for octonion comparison,
    ``gram`` and ``assoc`` bound Gram-matrix and second-associator residuals,
    and ``rank`` is the singular-value cutoff relative to the largest one.
    """

    eq: float = 1e-9
    gram: float = 1e-8
    assoc: float = 1e-8
    rank: float = 1e-8

    def with_(self, **changes) -> Tolerances:
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


DEFAULT_TOL = Tolerances()


def resolve(tol: Tolerances | None) -> Tolerances:
    return DEFAULT_TOL if tol is None else tol
