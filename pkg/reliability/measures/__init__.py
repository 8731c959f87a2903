"""Pairwise item measures, looked up by name."""

from reliability.errors import UnknownMeasure

from .base import BaseMeasure
from .divergence import SymmetrizedKLMeasure
from .overlap import BhattacharyyaMeasure, HellingerMeasure, TotalVariationMeasure
from .variation import VariationOfInformationMeasure


class MeasureRegistry:
    """Name -> measure class table used by ``distance_matrix`` and the CLI."""

    _measures: dict[str, type[BaseMeasure]] = {}

    @classmethod
    def register(cls, measure_cls: type[BaseMeasure]) -> type[BaseMeasure]:
        """Add ``measure_cls`` under its ``name``; usable as a class decorator."""
        cls._measures[measure_cls.name] = measure_cls
        return measure_cls

    @classmethod
    def get_measure_names(cls) -> list[str]:
        return list(cls._measures)

    @classmethod
    def describe(cls) -> dict[str, str]:
        """One-line description per registered measure, in registration order."""
        return {name: measure_cls.description for name, measure_cls in cls._measures.items()}

    @classmethod
    def create_measure(cls, name: str, params: dict | None = None) -> BaseMeasure:
        """Build the measure called ``name`` and apply ``params`` to it.

        Raises:
            UnknownMeasure: ``name`` is not registered.
            InvalidConfig: ``params`` are rejected by the measure.
        """
        try:
            measure_cls = cls._measures[name]
        except KeyError:
            raise UnknownMeasure(
                f"Unknown measure: {name!r}; valid options: {', '.join(cls._measures)}"
            ) from None
        measure = measure_cls()
        if params:
            measure.configure(params)
        return measure


for _measure_cls in (
    SymmetrizedKLMeasure,
    VariationOfInformationMeasure,
    BhattacharyyaMeasure,
    TotalVariationMeasure,
    HellingerMeasure,
):
    MeasureRegistry.register(_measure_cls)
