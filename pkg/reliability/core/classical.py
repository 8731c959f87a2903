"""Classical reliability: Cronbach alpha, respondent reliability, zero-variation diagnostics.

Sums of squares are accumulated as exact integers (``count * sum(x**2) - sum(x)**2``),
so the ``n - 1`` divisor cancels exactly and identical columns give alpha == 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from reliability.core.response_matrix import ResponseMatrix
from reliability.errors import DegenerateTotalVariance, TooFewItems, TooFewRespondents


@dataclass(frozen=True, eq=False)
class ZeroVariationReport:
    """Per-respondent variance diagnostics.

    Attributes:
        flags: Length-n bool array, True where respondent i gave one level to every item.
        respondent_variances: Length-n sample variances of each row (divisor p - 1).
        m: Number of respondents with nonzero variation.
        ratio: ``m / n``.
    """

    flags: np.ndarray
    respondent_variances: np.ndarray
    m: int
    ratio: float

    @property
    def n(self) -> int:
        return len(self.flags)

    @property
    def single_minded(self) -> list[int]:
        """1-based indices of zero-variation respondents."""
        return (np.flatnonzero(self.flags) + 1).tolist()


@dataclass(frozen=True, eq=False)
class ItemTotals:
    """Column sums ``Z_j`` of the response matrix."""

    totals: np.ndarray


def _scaled_sum_of_squares(x: np.ndarray, axis: int) -> list[int]:
    """Return ``count * SS`` along ``axis`` as Python ints, SS being the centred sum of squares."""
    count = x.shape[axis]
    s1 = x.sum(axis=axis).tolist()
    s2 = (x * x).sum(axis=axis).tolist()
    return [count * b - a * a for a, b in zip(s1, s2)]


def cronbach_alpha(m: ResponseMatrix) -> float:
    """Empirical Cronbach alpha of the items (columns) of ``m``.

    ``(p/(p-1)) * (1 - sum_j s_j^2 / s_total^2)`` with sample variances of the
    columns and of the per-respondent row sums. The result is not clamped and
    may be negative.

    Raises:
        TooFewItems: ``p < 2``.
        DegenerateTotalVariance: All row sums are equal.
    """
    p = m.p
    if p < 2:
        raise TooFewItems(f"Cronbach alpha needs at least 2 items, got {p}")

    x = m.entries
    item_ss = sum(_scaled_sum_of_squares(x, axis=0))
    totals = x.sum(axis=1)
    (total_ss,) = _scaled_sum_of_squares(totals[:, None], axis=0)
    if total_ss == 0:
        raise DegenerateTotalVariance(
            "All respondents have the same total score; the variance of totals is zero"
        )
    return p * (total_ss - item_ss) / ((p - 1) * total_ss)


def respondent_reliability(m: ResponseMatrix) -> float:
    """Respondent reliability: Cronbach alpha of the transposed matrix.

    Raises:
        TooFewRespondents: ``n < 2``.
        DegenerateTotalVariance: All item totals ``Z_j`` are equal.
    """
    if m.n < 2:
        raise TooFewRespondents(f"Respondent reliability needs at least 2 respondents, got {m.n}")
    return cronbach_alpha(m.transpose())


def zero_variation_report(m: ResponseMatrix) -> ZeroVariationReport:
    """Flag single-minded respondents and report each row's sample variance."""
    p = m.p
    if p < 2:
        raise TooFewItems(f"Respondent variance needs at least 2 items, got {p}")

    scaled = np.array(_scaled_sum_of_squares(m.entries, axis=1), dtype=np.float64)
    variances = scaled / (p * (p - 1))
    flags = scaled == 0
    nonzero = int(np.count_nonzero(~flags))
    return ZeroVariationReport(
        flags=flags,
        respondent_variances=variances,
        m=nonzero,
        ratio=nonzero / m.n,
    )


def item_totals(m: ResponseMatrix) -> ItemTotals:
    return ItemTotals(totals=m.entries.sum(axis=0))
