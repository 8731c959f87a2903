"""Variation of information between two items."""

from reliability.core.information import variation_of_information
from reliability.core.response_matrix import ResponseMatrix

from .base import BaseMeasure


class VariationOfInformationMeasure(BaseMeasure):
    """Needs the joint distribution of the pair, not just the marginals."""

    name = "vi"
    description = "variation of information (bits)"

    def between(self, m: ResponseMatrix, i: int, j: int) -> float:
        return variation_of_information(m, i, j)
