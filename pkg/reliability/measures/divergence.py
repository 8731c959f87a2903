"""Symmetrized Kullback-Leibler divergence between item distributions."""

from reliability.core.information import kl2
from reliability.errors import InvalidConfig

from .base import MarginalMeasure


class SymmetrizedKLMeasure(MarginalMeasure):
    """KL2 in bits; optional additive smoothing for items with unshared levels."""

    name = "kl2"
    description = "symmetrized Kullback-Leibler divergence (bits)"

    def __init__(self) -> None:
        self._smoothing = 0.0

    @property
    def smoothing(self) -> float:
        return self._smoothing

    def configure(self, params: dict) -> None:
        super().configure(params)
        if "smoothing" in params:
            eps = float(params["smoothing"])
            if eps < 0:
                raise InvalidConfig(f"smoothing must be non-negative, got {eps}")
            self._smoothing = eps

    def compare(self, p, q) -> float:
        return kl2(p, q, smoothing=self._smoothing)
