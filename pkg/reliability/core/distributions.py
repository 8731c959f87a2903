"""Empirical distributions over Likert levels.

Item distributions v_j, respondent distributions z_i, the modal-answer
distribution w and pairwise joint item distributions are all plug-in
relative frequencies.
"""

from __future__ import annotations

import numpy as np

from reliability.core.response_matrix import ResponseMatrix, check_index

PROB_TOLERANCE = 1e-9


def _validate_simplex(probs: np.ndarray, what: str) -> None:
    if probs.size == 0:
        raise ValueError(f"{what} is empty")
    if not np.all(np.isfinite(probs)):
        raise ValueError(f"{what} contains non-finite entries")
    if probs.min() < -PROB_TOLERANCE or probs.max() > 1 + PROB_TOLERANCE:
        raise ValueError(f"{what} has entries outside [0, 1]")
    total = probs.sum()
    if abs(total - 1.0) > PROB_TOLERANCE:
        raise ValueError(f"{what} sums to {total!r}, expected 1")


class ProbVector:
    """Probability vector over the K levels of a scale (entry k-1 is level k)."""

    __slots__ = ("_probs",)

    def __init__(self, probs: np.ndarray | list[float]) -> None:
        arr = np.array(probs, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError(f"ProbVector must be 1-dimensional, got shape {arr.shape}")
        _validate_simplex(arr, "ProbVector")
        arr.flags.writeable = False
        self._probs = arr

    @classmethod
    def from_counts(cls, counts: np.ndarray) -> ProbVector:
        counts = np.asarray(counts)
        return cls(counts / counts.sum())

    @classmethod
    def uniform(cls, K: int) -> ProbVector:
        return cls(np.full(K, 1.0 / K))

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def K(self) -> int:
        return self._probs.shape[0]

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return self._probs if dtype is None else self._probs.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbVector):
            return NotImplemented
        return np.array_equal(self._probs, other._probs)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ProbVector({np.array2string(self._probs, precision=6, separator=', ')})"


class JointProbMatrix:
    """K×K joint distribution of two items; entry (k, l) is P(first = k+1, second = l+1)."""

    __slots__ = ("_probs",)

    def __init__(self, probs: np.ndarray | list[list[float]]) -> None:
        arr = np.array(probs, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"JointProbMatrix must be square, got shape {arr.shape}")
        _validate_simplex(arr, "JointProbMatrix")
        arr.flags.writeable = False
        self._probs = arr

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def K(self) -> int:
        return self._probs.shape[0]

    @property
    def first_marginal(self) -> ProbVector:
        """Distribution of the first item (row sums)."""
        return ProbVector(self._probs.sum(axis=1))

    @property
    def second_marginal(self) -> ProbVector:
        """Distribution of the second item (column sums)."""
        return ProbVector(self._probs.sum(axis=0))

    def flattened(self) -> ProbVector:
        return ProbVector(self._probs.ravel())

    def __repr__(self) -> str:
        return f"JointProbMatrix(K={self.K})"


def item_distribution(m: ResponseMatrix, j: int) -> ProbVector:
    """Relative frequency of each level among the n answers to item ``j`` (1-based)."""
    return ProbVector.from_counts(m.item_counts[check_index(j, m.p, "item")])


def respondent_distribution(m: ResponseMatrix, i: int) -> ProbVector:
    """Relative frequency of each level among respondent ``i``'s p answers (1-based)."""
    return ProbVector.from_counts(m.respondent_counts[check_index(i, m.n, "respondent")])


def item_profile(m: ResponseMatrix) -> np.ndarray:
    """The p×K matrix V whose row j is the distribution of item j."""
    return m.item_counts / m.n


def respondent_profile(m: ResponseMatrix) -> np.ndarray:
    """The n×K matrix whose row i is the distribution of respondent i."""
    return m.respondent_counts / m.p


def all_item_distributions(m: ResponseMatrix) -> list[ProbVector]:
    return [ProbVector(row) for row in item_profile(m)]


def all_respondent_distributions(m: ResponseMatrix) -> list[ProbVector]:
    return [ProbVector(row) for row in respondent_profile(m)]


def modal_responses(m: ResponseMatrix) -> np.ndarray:
    """Most frequent level Y_i of each respondent; ties go to the smallest level."""
    # argmax returns the first maximum
    return np.argmax(m.respondent_counts, axis=1) + 1


def modal_distribution(m: ResponseMatrix) -> ProbVector:
    """Distribution w of the modal answers across respondents."""
    counts = np.bincount(modal_responses(m) - 1, minlength=m.K)
    return ProbVector(counts / m.n)


def joint_item_distribution(m: ResponseMatrix, i: int, j: int) -> JointProbMatrix:
    """Co-occurrence frequencies of the levels given to items ``i`` and ``j`` (1-based)."""
    K = m.K
    a = m.column(i) - 1
    b = m.column(j) - 1
    counts = np.bincount(a * K + b, minlength=K * K).reshape(K, K)
    return JointProbMatrix(counts / m.n)
