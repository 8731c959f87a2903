import numpy as np
import pytest

from reliability.core.response_matrix import LikertScale, ResponseMatrix


def matrix(rows, K=5) -> ResponseMatrix:
    return ResponseMatrix(np.array(rows), LikertScale(K))


@pytest.fixture
def scale5() -> LikertScale:
    return LikertScale(5)


@pytest.fixture
def make_matrix():
    """Factory building a ResponseMatrix from nested lists."""
    return matrix


@pytest.fixture
def uniform_matrix() -> ResponseMatrix:
    rng = np.random.default_rng(12345)
    return ResponseMatrix(rng.integers(1, 6, size=(60, 8)), LikertScale(5))


@pytest.fixture
def write_csv(tmp_path):
    """Write CSV text to a temp file and return its path."""

    def _write(text: str, name: str = "responses.csv"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
