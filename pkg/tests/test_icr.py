import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from strategies import response_matrices

from reliability.core.icr import (
    PHI1,
    PHI2,
    PHI3,
    PHI4,
    VARIANTS,
    DenominatorMode,
    NumeratorMode,
    ReliabilityReport,
    icr,
    icr_values,
    item_entropies,
    low_entropy_items,
    modal_entropy,
    reliability_report,
    respondent_entropies,
)
from reliability.core.response_matrix import LikertScale, ResponseMatrix
from reliability.errors import DegenerateModalEntropy, TooFewItems, TooFewRespondents


def test_variant_names():
    assert [v.name for v in VARIANTS] == ["phi1", "phi2", "phi3", "phi4"]
    assert PHI3.numerator_mode is NumeratorMode.MIN
    assert PHI4.denominator_mode is DenominatorMode.EMPIRICAL


class TestIcr:
    def test_single_minded_respondents(self):
        rng = np.random.default_rng(99)
        for _ in range(200):
            K = int(rng.integers(2, 8))
            n = int(rng.integers(1, 31))
            p = int(rng.integers(2, 21))
            levels = rng.integers(1, K + 1, size=n)
            m = ResponseMatrix(np.repeat(levels[:, None], p, axis=1), LikertScale(K))
            for variant in VARIANTS:
                assert icr(m, variant) == 1.0

    def test_uniform_respondent(self, make_matrix):
        m = make_matrix([[1, 2, 3, 4, 5], [5, 4, 3, 2, 1]])
        assert icr(m, PHI1) == pytest.approx(0.0, abs=1e-12)
        assert icr(m, PHI2) == pytest.approx(0.0, abs=1e-12)

    def test_theoretical_denominator(self, make_matrix):
        m = make_matrix([[1, 1, 2, 2], [3, 3, 3, 3]], K=4)
        # respondent entropies are 1 and 0 bits, log2(4) = 2
        assert icr(m, PHI1) == 1.0
        assert icr(m, PHI2) == 0.5

    def test_degenerate_modal_entropy(self, make_matrix):
        m = make_matrix([[1, 1, 2], [1, 1, 3]], K=3)
        assert modal_entropy(m) == 0.0
        with pytest.raises(DegenerateModalEntropy):
            icr(m, PHI3)
        values = icr_values(m)
        assert isinstance(values["phi4"], DegenerateModalEntropy)
        assert 0.0 < values["phi1"] < 1.0

    def test_empirical_variant_can_leave_unit_interval(self, make_matrix):
        m = make_matrix([[1, 2, 3, 4, 5, 5], [2, 3, 4, 5, 1, 1]])
        assert modal_entropy(m) == pytest.approx(1.0)
        assert icr(m, PHI3) < 0

    @settings(max_examples=1000, deadline=None)
    @given(response_matrices())
    def test_theoretical_variants_in_unit_interval(self, m):
        phi1, phi2 = icr(m, PHI1), icr(m, PHI2)
        assert 0.0 <= phi2 <= phi1 <= 1.0

    @settings(max_examples=1000, deadline=None)
    @given(response_matrices())
    def test_min_variant_dominates_max_variant(self, m):
        values = icr_values(m)
        if not isinstance(values["phi3"], Exception) and not isinstance(values["phi4"], Exception):
            assert values["phi3"] >= values["phi4"]

    @pytest.mark.slow
    def test_tends_to_zero_with_more_items(self):
        n = 100
        means = []
        for p in (20, 200, 2000):
            values = []
            for seed in range(20):
                rng = np.random.default_rng(seed)
                m = ResponseMatrix(rng.integers(1, 6, size=(n, p)), LikertScale(5))
                values.append(icr(m, PHI1))
            means.append(float(np.mean(values)))
        assert means[0] > means[1] > means[2]
        assert means[2] < 0.05


class TestEntropies:
    def test_respondent_entropies(self, make_matrix):
        m = make_matrix([[1, 1, 2, 2], [3, 3, 3, 3]], K=4)
        np.testing.assert_allclose(respondent_entropies(m), [1.0, 0.0])

    def test_item_entropies(self, make_matrix):
        m = make_matrix([[1, 3], [2, 3]])
        np.testing.assert_allclose(item_entropies(m), [1.0, 0.0])

    def test_low_entropy_items(self, make_matrix):
        m = make_matrix([[1, 3, 1], [2, 3, 5], [3, 3, 4], [4, 3, 2]])
        assert low_entropy_items(m) == [2]
        assert low_entropy_items(m, threshold=3.0) == [1, 2, 3]


class TestReliabilityReport:
    def test_single_minded_respondents(self, make_matrix):
        m = make_matrix([[1] * 4, [2] * 4, [3] * 4, [4] * 4])
        report = reliability_report(m)
        assert report.alpha == 1.0
        assert report.respondent_alpha is None
        assert report.errors == {"respondent_alpha": "DegenerateTotalVariance"}
        assert report.phi == (1.0, 1.0, 1.0, 1.0)
        assert report.zero_variation.m == 0

    def test_everyone_identical(self, make_matrix):
        report = reliability_report(make_matrix([[2, 2, 2]] * 4))
        assert report.alpha is None and report.respondent_alpha is None
        assert set(report.errors) == {"alpha", "respondent_alpha"}
        assert report.phi == (1.0, 1.0, 1.0, 1.0)

    def test_phi_matches_icr(self, uniform_matrix):
        report = reliability_report(uniform_matrix)
        assert report.phi == tuple(icr(uniform_matrix, v) for v in VARIANTS)
        assert len(report.item_entropies) == uniform_matrix.p
        assert (report.n, report.p, report.K) == (60, 8, 5)

    def test_degenerate_variants_recorded(self, make_matrix):
        report = reliability_report(make_matrix([[1, 1, 2], [1, 1, 3]], K=3))
        assert report.phi[2] is None and report.phi[3] is None
        assert report.errors["phi3"] == "DegenerateModalEntropy"

    def test_note_outside_unit_interval(self, make_matrix):
        report = reliability_report(make_matrix([[1, 2, 3, 4, 5, 5], [2, 3, 4, 5, 1, 1]]))
        assert report.phi[2] < 0
        assert any(note.startswith("phi3=") for note in report.notes)

    def test_too_few_items(self, make_matrix):
        with pytest.raises(TooFewItems):
            reliability_report(make_matrix([[1], [2]]))

    def test_too_few_respondents(self, make_matrix):
        with pytest.raises(TooFewRespondents):
            reliability_report(make_matrix([[1, 2, 3]]))

    def test_dict_round_trip(self, uniform_matrix):
        report = reliability_report(uniform_matrix)
        restored = ReliabilityReport.from_dict(json.loads(json.dumps(report.to_dict())))
        assert restored.alpha == pytest.approx(report.alpha, abs=1e-12)
        assert restored.phi == pytest.approx(report.phi, abs=1e-12)
        assert restored.item_entropies == pytest.approx(report.item_entropies, abs=1e-12)
        assert restored.zero_variation.flags.tolist() == report.zero_variation.flags.tolist()
        assert restored.errors == report.errors

    def test_precision(self, uniform_matrix):
        data = reliability_report(uniform_matrix).to_dict(precision=3)
        assert data["modal_entropy"] == float(f"{data['modal_entropy']:.3g}")

    def test_flat_row(self, make_matrix):
        row = reliability_report(make_matrix([[1] * 3, [2] * 3])).to_flat_row()
        assert row["phi1"] == 1.0
        assert row["respondent_alpha"] is None
        assert row["errors"] == "respondent_alpha=DegenerateTotalVariance"
        assert "item_entropy_3" in row and not math.isnan(row["item_entropy_3"])
