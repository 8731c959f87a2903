"""Pairwise item distance matrices."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from reliability.core.response_matrix import ResponseMatrix, item_labels
from reliability.errors import DisjointSupport, SupportMismatch
from reliability.measures import BaseMeasure, MeasureRegistry

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric p×p matrix of one item measure; undefined cells are NaN.

    Attributes:
        measure: Registered measure name.
        labels: Item labels for rows and columns.
        values: (p, p) float array with an exactly zero diagonal.
        errors: Error code per undefined pair, keyed by 1-based ``(i, j)`` with ``i < j``.
    """

    measure: str
    labels: list[str]
    values: np.ndarray
    errors: dict[tuple[int, int], str] = field(default_factory=dict)

    @property
    def na_count(self) -> int:
        """Number of undefined item pairs (each counted once)."""
        return len(self.errors)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.values, self.values.T, equal_nan=True))


def distance_matrix(
    m: ResponseMatrix,
    measure: str | BaseMeasure,
    smoothing: float = 0.0,
) -> DistanceMatrix:
    """Evaluate ``measure`` on every pair of items of ``m``.

    Pairs where the measure is undefined (SupportMismatch, DisjointSupport)
    become NaN and are listed in ``errors``.

    Args:
        m: Response matrix.
        measure: Registered measure name or a configured measure instance.
        smoothing: Additive smoothing passed to measures that accept it.
    """
    if isinstance(measure, str):
        measure = MeasureRegistry.create_measure(measure, {"smoothing": smoothing} if smoothing else None)

    p = m.p
    values = np.zeros((p, p), dtype=np.float64)
    errors: dict[tuple[int, int], str] = {}

    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            try:
                value = measure.between(m, i, j)
            except (SupportMismatch, DisjointSupport) as e:
                value = np.nan
                errors[(i, j)] = e.code
            values[i - 1, j - 1] = value
            values[j - 1, i - 1] = value

    if errors:
        logger.warning(
            "%s undefined for %d of %d item pairs (reported as NA)",
            measure.name, len(errors), p * (p - 1) // 2,
        )
    return DistanceMatrix(measure=measure.name, labels=item_labels(p), values=values, errors=errors)
