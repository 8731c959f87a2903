"""Information consistency ratio (ICR) and the full reliability report.

The ratio is ``1 - extremal respondent entropy / denominator``. The four
variants combine a min or max over respondents with either ``log2(K)`` or
the entropy of the modal-answer distribution as denominator.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Any

import numpy as np

from reliability.core.classical import (
    ZeroVariationReport,
    cronbach_alpha,
    respondent_reliability,
    zero_variation_report,
)
from reliability.core.distributions import item_profile, modal_distribution, respondent_profile
from reliability.core.information import entropies, entropy, max_entropy
from reliability.core.response_matrix import ResponseMatrix
from reliability.errors import (
    DegenerateModalEntropy,
    ReliabilityError,
    TooFewItems,
    TooFewRespondents,
)

logger = logging.getLogger(__name__)


class NumeratorMode(str, Enum):
    MIN = "min_over_respondents"
    MAX = "max_over_respondents"


class DenominatorMode(str, Enum):
    THEORETICAL = "theoretical_log2K"
    EMPIRICAL = "empirical_modal_entropy"


@dataclass(frozen=True)
class IcrVariant:
    numerator_mode: NumeratorMode
    denominator_mode: DenominatorMode

    @property
    def name(self) -> str:
        return _VARIANT_NAMES[(self.numerator_mode, self.denominator_mode)]


_VARIANT_NAMES = {
    (NumeratorMode.MIN, DenominatorMode.THEORETICAL): "phi1",
    (NumeratorMode.MAX, DenominatorMode.THEORETICAL): "phi2",
    (NumeratorMode.MIN, DenominatorMode.EMPIRICAL): "phi3",
    (NumeratorMode.MAX, DenominatorMode.EMPIRICAL): "phi4",
}

PHI1 = IcrVariant(NumeratorMode.MIN, DenominatorMode.THEORETICAL)
PHI2 = IcrVariant(NumeratorMode.MAX, DenominatorMode.THEORETICAL)
PHI3 = IcrVariant(NumeratorMode.MIN, DenominatorMode.EMPIRICAL)
PHI4 = IcrVariant(NumeratorMode.MAX, DenominatorMode.EMPIRICAL)
VARIANTS = (PHI1, PHI2, PHI3, PHI4)


def respondent_entropies(m: ResponseMatrix) -> np.ndarray:
    """Entropy (bits) of each respondent's answer distribution."""
    return entropies(respondent_profile(m))


def item_entropies(m: ResponseMatrix) -> np.ndarray:
    """Entropy (bits) of each item's answer distribution."""
    return entropies(item_profile(m))


def modal_entropy(m: ResponseMatrix) -> float:
    """Entropy of the modal-answer distribution w."""
    return entropy(modal_distribution(m))


def _ratio(
    variant: IcrVariant,
    min_entropy: float,
    max_entropy_observed: float,
    theoretical: float,
    modal: float,
) -> float:
    numerator = min_entropy if variant.numerator_mode is NumeratorMode.MIN else max_entropy_observed
    if variant.denominator_mode is DenominatorMode.THEORETICAL:
        # an entropy can exceed log2(K) by an ulp
        return max(0.0, 1.0 - numerator / theoretical)
    denominator = modal
    if denominator == 0:
        if numerator == 0:
            return 1.0
        raise DegenerateModalEntropy(
            f"{variant.name}: modal-answer entropy is 0 while the respondent entropy is {numerator:.6g}"
        )
    return 1.0 - numerator / denominator


def icr(m: ResponseMatrix, variant: IcrVariant = PHI1) -> float:
    """Information consistency ratio of ``m`` for one variant.

    Raises:
        DegenerateModalEntropy: Empirical denominator is 0 with a positive numerator.
    """
    h = respondent_entropies(m)
    modal = modal_entropy(m) if variant.denominator_mode is DenominatorMode.EMPIRICAL else math.nan
    return _ratio(variant, float(h.min()), float(h.max()), max_entropy(m.K), modal)


def icr_values(m: ResponseMatrix) -> dict[str, float | ReliabilityError]:
    """All four variants keyed by name; degenerate variants map to their error."""
    h = respondent_entropies(m)
    h_min, h_max = float(h.min()), float(h.max())
    theoretical = max_entropy(m.K)
    modal = modal_entropy(m)
    values: dict[str, float | ReliabilityError] = {}
    for variant in VARIANTS:
        try:
            values[variant.name] = _ratio(variant, h_min, h_max, theoretical, modal)
        except DegenerateModalEntropy as e:
            values[variant.name] = e
    return values


def low_entropy_items(m: ResponseMatrix, threshold: float | None = None) -> list[int]:
    """1-based items whose entropy is below ``threshold`` bits (default ``log2(K) / 2``)."""
    if threshold is None:
        threshold = max_entropy(m.K) / 2
    return (np.flatnonzero(item_entropies(m) < threshold) + 1).tolist()


def _round_sig(value: float | None, precision: int | None) -> float | None:
    if value is None or precision is None:
        return value
    return float(f"{value:.{precision}g}")


@dataclass(frozen=True, eq=False)
class ReliabilityReport:
    """All scalar reliability indices for one response matrix.

    Fields that could not be computed are None and have an entry in ``errors``
    mapping the field name (``alpha``, ``respondent_alpha``, ``phi3``, ...) to an
    error code.
    """

    n: int
    p: int
    K: int
    alpha: float | None
    respondent_alpha: float | None
    phi: tuple[float | None, float | None, float | None, float | None]
    min_respondent_entropy: float
    max_respondent_entropy: float
    modal_entropy: float
    item_entropies: tuple[float, ...]
    zero_variation: ZeroVariationReport
    low_entropy_items: tuple[int, ...] = ()
    errors: dict[str, str] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def to_dict(self, precision: int | None = None) -> dict[str, Any]:
        """JSON-ready mapping; ``precision`` rounds floats to that many significant digits."""
        r = partial(_round_sig, precision=precision)
        return {
            "n": self.n,
            "p": self.p,
            "K": self.K,
            "alpha": r(self.alpha),
            "respondent_alpha": r(self.respondent_alpha),
            "phi": [r(v) for v in self.phi],
            "min_respondent_entropy": r(self.min_respondent_entropy),
            "max_respondent_entropy": r(self.max_respondent_entropy),
            "modal_entropy": r(self.modal_entropy),
            "item_entropies": [r(v) for v in self.item_entropies],
            "low_entropy_items": list(self.low_entropy_items),
            "zero_variation": {
                "m": self.zero_variation.m,
                "ratio": r(self.zero_variation.ratio),
                "flags": self.zero_variation.flags.tolist(),
                "respondent_variances": [r(v) for v in self.zero_variation.respondent_variances.tolist()],
            },
            "errors": dict(self.errors),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ReliabilityReport:
        zv = data["zero_variation"]
        return cls(
            n=int(data["n"]),
            p=int(data["p"]),
            K=int(data["K"]),
            alpha=data["alpha"],
            respondent_alpha=data["respondent_alpha"],
            phi=tuple(data["phi"]),
            min_respondent_entropy=data["min_respondent_entropy"],
            max_respondent_entropy=data["max_respondent_entropy"],
            modal_entropy=data["modal_entropy"],
            item_entropies=tuple(data["item_entropies"]),
            zero_variation=ZeroVariationReport(
                flags=np.array(zv["flags"], dtype=bool),
                respondent_variances=np.array(zv["respondent_variances"], dtype=np.float64),
                m=int(zv["m"]),
                ratio=zv["ratio"],
            ),
            low_entropy_items=tuple(data.get("low_entropy_items", ())),
            errors=dict(data.get("errors", {})),
            notes=tuple(data.get("notes", ())),
        )

    def to_flat_row(self, precision: int | None = None) -> dict[str, Any]:
        """Single flat mapping for one-row CSV output."""
        r = partial(_round_sig, precision=precision)
        row: dict[str, Any] = {
            "n": self.n,
            "p": self.p,
            "K": self.K,
            "alpha": r(self.alpha),
            "respondent_alpha": r(self.respondent_alpha),
        }
        for k, v in enumerate(self.phi, start=1):
            row[f"phi{k}"] = r(v)
        row.update(
            min_respondent_entropy=r(self.min_respondent_entropy),
            max_respondent_entropy=r(self.max_respondent_entropy),
            modal_entropy=r(self.modal_entropy),
            zero_variation_m=self.zero_variation.m,
            zero_variation_ratio=r(self.zero_variation.ratio),
        )
        for j, v in enumerate(self.item_entropies, start=1):
            row[f"item_entropy_{j}"] = r(v)
        row["errors"] = ";".join(f"{k}={v}" for k, v in self.errors.items())
        return row


def reliability_report(
    m: ResponseMatrix,
    low_entropy_threshold: float | None = None,
) -> ReliabilityReport:
    """Compute every index for ``m``; component failures are recorded per field.

    Raises:
        TooFewItems: ``p < 2``.
        TooFewRespondents: ``n < 2``.
    """
    if m.p < 2:
        raise TooFewItems(f"A reliability report needs at least 2 items, got {m.p}")
    if m.n < 2:
        raise TooFewRespondents(f"A reliability report needs at least 2 respondents, got {m.n}")

    errors: dict[str, str] = {}

    def attempt(name: str, fn) -> float | None:
        try:
            return fn(m)
        except ReliabilityError as e:
            logger.warning("%s not defined: %s (%s)", name, e.code, e)
            errors[name] = e.code
            return None

    alpha = attempt("alpha", cronbach_alpha)
    respondent_alpha = attempt("respondent_alpha", respondent_reliability)

    h = respondent_entropies(m)
    modal = modal_entropy(m)
    theoretical = max_entropy(m.K)
    phi: list[float | None] = []
    notes: list[str] = []
    for variant in VARIANTS:
        try:
            value = _ratio(variant, float(h.min()), float(h.max()), theoretical, modal)
        except DegenerateModalEntropy as e:
            logger.warning("%s not defined: %s", variant.name, e)
            errors[variant.name] = e.code
            value = None
        if value is not None and not 0.0 <= value <= 1.0:
            notes.append(f"{variant.name}={value:.6g} lies outside [0, 1] (empirical denominator)")
        phi.append(value)

    return ReliabilityReport(
        n=m.n,
        p=m.p,
        K=m.K,
        alpha=alpha,
        respondent_alpha=respondent_alpha,
        phi=tuple(phi),  # type: ignore[arg-type]
        min_respondent_entropy=float(h.min()),
        max_respondent_entropy=float(h.max()),
        modal_entropy=modal,
        item_entropies=tuple(item_entropies(m).tolist()),
        zero_variation=zero_variation_report(m),
        low_entropy_items=tuple(low_entropy_items(m, low_entropy_threshold)),
        errors=errors,
        notes=tuple(notes),
    )
