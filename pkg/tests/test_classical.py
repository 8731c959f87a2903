import numpy as np
import pytest
from hypothesis import assume, given, settings
from strategies import response_matrices

from reliability.core.classical import (
    cronbach_alpha,
    item_totals,
    respondent_reliability,
    zero_variation_report,
)
from reliability.core.response_matrix import LikertScale, ResponseMatrix, transpose
from reliability.errors import DegenerateTotalVariance, ReliabilityError, TooFewItems, TooFewRespondents


def brute_force_respondent_alpha(x: np.ndarray) -> float:
    """Respondent reliability written out loop by loop."""
    n, p = x.shape
    numerator = 0.0
    for i in range(n):
        mean = sum(x[i]) / p
        numerator += sum((x[i, j] - mean) ** 2 for j in range(p))
    z = [sum(x[i, j] for i in range(n)) for j in range(p)]
    z_mean = sum(z) / p
    denominator = sum((zj - z_mean) ** 2 for zj in z)
    return n / (n - 1) * (1 - numerator / denominator)


class TestCronbachAlpha:
    def test_identical_columns(self, make_matrix):
        column = [1, 2, 3, 4, 5]
        m = make_matrix([[v] * 4 for v in column])
        assert cronbach_alpha(m) == 1.0

    def test_shifted_columns(self, make_matrix):
        # equal variances and perfect correlation
        assert cronbach_alpha(make_matrix([[1, 2], [2, 3], [3, 4]])) == 1.0

    def test_may_be_negative(self, make_matrix):
        m = make_matrix([[1, 3], [2, 2], [3, 1], [1, 1]])
        assert cronbach_alpha(m) == pytest.approx(-5 / 3)

    def test_single_item(self, make_matrix):
        with pytest.raises(TooFewItems):
            cronbach_alpha(make_matrix([[1], [2]]))

    def test_equal_totals(self, make_matrix):
        with pytest.raises(DegenerateTotalVariance):
            cronbach_alpha(make_matrix([[1, 2], [2, 1]]))

    def test_identical_nonconstant_columns_oracle(self):
        rng = np.random.default_rng(2017)
        for _ in range(200):
            K = int(rng.integers(2, 8))
            n = int(rng.integers(2, 51))
            p = int(rng.integers(2, 21))
            column = rng.integers(1, K + 1, size=n)
            column[0], column[1] = 1, K
            m = ResponseMatrix(np.repeat(column[:, None], p, axis=1), LikertScale(K))
            assert cronbach_alpha(m) == pytest.approx(1.0, abs=1e-9)

    @settings(max_examples=1000, deadline=None)
    @given(response_matrices(min_p=2))
    def test_upper_bound(self, m):
        try:
            alpha = cronbach_alpha(m)
        except DegenerateTotalVariance:
            assume(False)
        assert alpha <= m.p / (m.p - 1) + 1e-12


class TestRespondentReliability:
    def test_identical_rows(self, make_matrix):
        m = make_matrix([[1, 3, 5, 2]] * 3)
        assert respondent_reliability(m) == 1.0

    def test_degenerate_item_totals(self, make_matrix):
        # item totals are 4, 4, 4
        with pytest.raises(DegenerateTotalVariance):
            respondent_reliability(make_matrix([[1, 2, 3], [3, 2, 1]]))

    def test_matches_loop_formula(self, make_matrix):
        rows = [[1, 2, 3], [3, 3, 1], [2, 5, 4], [4, 1, 1]]
        m = make_matrix(rows)
        expected = brute_force_respondent_alpha(np.array(rows))
        assert respondent_reliability(m) == pytest.approx(expected, rel=1e-12)

    def test_single_respondent(self, make_matrix):
        with pytest.raises(TooFewRespondents):
            respondent_reliability(make_matrix([[1, 2, 3]]))

    @settings(max_examples=1000, deadline=None)
    @given(response_matrices(min_n=2))
    def test_equals_alpha_of_transpose(self, m):
        try:
            expected = cronbach_alpha(transpose(m))
        except ReliabilityError as e:
            with pytest.raises(type(e)):
                respondent_reliability(m)
            return
        assert respondent_reliability(m) == expected


class TestZeroVariation:
    def test_flags_constant_rows(self, make_matrix):
        report = zero_variation_report(make_matrix([[3, 3, 3, 3], [1, 2, 1, 2], [5, 5, 5, 4]]))
        assert report.flags.tolist() == [True, False, False]
        assert report.m == 2
        assert report.ratio == pytest.approx(2 / 3)
        assert report.single_minded == [1]

    def test_variance_uses_p_minus_one(self, make_matrix):
        report = zero_variation_report(make_matrix([[1, 2, 1, 2]]))
        assert report.respondent_variances[0] == pytest.approx(1 / 3)

    def test_all_constant(self, make_matrix):
        report = zero_variation_report(make_matrix([[2, 2], [4, 4]]))
        assert report.m == 0
        assert report.ratio == 0.0

    def test_single_item(self, make_matrix):
        with pytest.raises(TooFewItems):
            zero_variation_report(make_matrix([[1], [2]]))


def test_item_totals(make_matrix):
    assert item_totals(make_matrix([[1, 2], [3, 4]])).totals.tolist() == [4, 6]
