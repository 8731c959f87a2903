"""Base classes for pairwise item measures."""

from abc import ABC, abstractmethod

from reliability.core.distributions import ProbVector, item_distribution
from reliability.core.response_matrix import ResponseMatrix


class BaseMeasure(ABC):
    """Symmetric dissimilarity between two items of a response matrix.

    ``between`` may raise SupportMismatch or DisjointSupport when the value is
    undefined for that pair; ``distance_matrix`` turns those into NA cells.
    """

    name: str = "base"
    description: str = ""

    def configure(self, params: dict) -> None:
        """Accept measure options such as ``{"smoothing": 0.01}``.

        Options a measure does not use are ignored, so one flag set can be
        passed to any measure.
        """

    @abstractmethod
    def between(self, m: ResponseMatrix, i: int, j: int) -> float:
        """Value for items ``i`` and ``j`` (1-based) of ``m``."""


class MarginalMeasure(BaseMeasure):
    """Measure that only looks at the two item distributions."""

    def between(self, m: ResponseMatrix, i: int, j: int) -> float:
        return self.compare(item_distribution(m, i), item_distribution(m, j))

    @abstractmethod
    def compare(self, p: ProbVector, q: ProbVector) -> float:
        ...
