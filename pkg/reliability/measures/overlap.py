"""Overlap-based measures: Bhattacharyya distance, total variation, Hellinger."""

from reliability.core.information import bhattacharyya_distance, hellinger, total_variation

from .base import MarginalMeasure


class BhattacharyyaMeasure(MarginalMeasure):
    name = "bc"
    description = "Bhattacharyya distance, -ln of the overlap coefficient"

    def compare(self, p, q) -> float:
        return bhattacharyya_distance(p, q)


class TotalVariationMeasure(MarginalMeasure):
    name = "tv"
    description = "total variation, half the l1 distance"

    def compare(self, p, q) -> float:
        return total_variation(p, q)


class HellingerMeasure(MarginalMeasure):
    name = "hellinger"
    description = "Hellinger distance"

    def compare(self, p, q) -> float:
        return hellinger(p, q)
