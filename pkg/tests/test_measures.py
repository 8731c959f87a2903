import math

import numpy as np
import pytest

from reliability.core.distances import distance_matrix
from reliability.core.information import hellinger
from reliability.errors import InvalidConfig, UnknownMeasure
from reliability.measures import BaseMeasure, MeasureRegistry
from reliability.measures.base import MarginalMeasure

BUILT_IN = ["kl2", "vi", "bc", "tv", "hellinger"]


class TestRegistry:
    def test_names(self):
        assert MeasureRegistry.get_measure_names()[:5] == BUILT_IN

    @pytest.mark.parametrize("name", BUILT_IN)
    def test_create(self, name):
        measure = MeasureRegistry.create_measure(name)
        assert isinstance(measure, BaseMeasure)
        assert measure.name == name
        assert measure.description

    def test_unknown_lists_options(self):
        with pytest.raises(UnknownMeasure) as exc:
            MeasureRegistry.create_measure("cosine")
        assert "hellinger" in str(exc.value)
        assert "cosine" in str(exc.value)

    def test_describe(self):
        descriptions = MeasureRegistry.describe()
        assert list(descriptions)[:5] == BUILT_IN
        assert "Hellinger" in descriptions["hellinger"]

    def test_create_with_params(self):
        assert MeasureRegistry.create_measure("kl2", {"smoothing": 0.5}).smoothing == 0.5

    def test_unused_params_ignored(self):
        assert MeasureRegistry.create_measure("tv", {"smoothing": 0.5}).name == "tv"

    def test_negative_smoothing(self):
        with pytest.raises(InvalidConfig):
            MeasureRegistry.create_measure("kl2", {"smoothing": -0.1})

    def test_register_custom(self, monkeypatch, make_matrix):
        monkeypatch.setattr(MeasureRegistry, "_measures", dict(MeasureRegistry._measures))

        @MeasureRegistry.register
        class SquaredHellinger(MarginalMeasure):
            name = "hellinger2"

            def compare(self, p, q):
                return hellinger(p, q) ** 2

        m = make_matrix([[1, 2], [1, 2], [2, 2]])
        dm = distance_matrix(m, "hellinger2")
        assert dm.measure == "hellinger2"
        assert dm.values[0, 1] == pytest.approx(hellinger([2 / 3, 1 / 3, 0, 0, 0], [0, 1, 0, 0, 0]) ** 2)


class TestDistanceMatrix:
    @pytest.mark.parametrize("name", BUILT_IN)
    def test_duplicated_items_are_zero(self, make_matrix, name):
        m = make_matrix([[1, 1, 3], [2, 2, 3], [5, 5, 1], [3, 3, 2]])
        dm = distance_matrix(m, name, smoothing=0.01)
        assert dm.values[0, 1] == pytest.approx(0.0, abs=1e-12)
        assert np.all(np.diag(dm.values) == 0.0)

    @pytest.mark.parametrize("name", BUILT_IN)
    def test_symmetric(self, uniform_matrix, name):
        dm = distance_matrix(uniform_matrix, name)
        assert dm.values.shape == (uniform_matrix.p, uniform_matrix.p)
        assert dm.is_symmetric()
        assert dm.labels[0] == "item_1"

    def test_kl2_unshared_levels_are_na(self, make_matrix):
        m = make_matrix([[1, 1, 4], [2, 1, 5], [1, 2, 4]])
        dm = distance_matrix(m, "kl2")
        assert math.isnan(dm.values[0, 2]) and math.isnan(dm.values[2, 0])
        assert dm.errors == {(1, 3): "SupportMismatch", (2, 3): "SupportMismatch"}
        assert dm.na_count == 2
        assert dm.values[0, 1] == 0.0

    def test_kl2_smoothing_fills_na(self, make_matrix):
        m = make_matrix([[1, 4], [2, 5]])
        dm = distance_matrix(m, "kl2", smoothing=0.01)
        assert dm.na_count == 0
        assert dm.values[0, 1] > 0

    def test_bc_disjoint(self, make_matrix):
        dm = distance_matrix(make_matrix([[1, 5], [1, 5]]), "bc")
        assert dm.errors == {(1, 2): "DisjointSupport"}
        assert math.isnan(dm.values[0, 1])

    def test_tv_is_always_defined(self, make_matrix):
        dm = distance_matrix(make_matrix([[1, 5], [1, 5]]), "tv")
        assert dm.values[0, 1] == 1.0
        assert dm.na_count == 0

    def test_accepts_configured_instance(self, make_matrix):
        measure = MeasureRegistry.create_measure("kl2")
        measure.configure({"smoothing": 0.5})
        dm = distance_matrix(make_matrix([[1, 4], [2, 5]]), measure)
        assert dm.na_count == 0

    def test_unknown_measure(self, make_matrix):
        with pytest.raises(UnknownMeasure):
            distance_matrix(make_matrix([[1, 2]]), "nope")
