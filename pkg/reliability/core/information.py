"""Entropy and pairwise measures on probability vectors.

Entropy, KL, KL2, mutual information and variation of information are in
bits. The Bhattacharyya distance uses the natural logarithm.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import stats

from reliability.core.distributions import (
    PROB_TOLERANCE,
    JointProbMatrix,
    ProbVector,
    joint_item_distribution,
)
from reliability.core.response_matrix import ResponseMatrix
from reliability.errors import DisjointSupport, InvalidScale, SupportMismatch

ENTROPY_BASE = 2

Distribution = ProbVector | np.ndarray


def _probs(v: Distribution) -> np.ndarray:
    return v.probs if isinstance(v, ProbVector) else np.asarray(v, dtype=np.float64)


def _pair(p: Distribution, q: Distribution) -> tuple[np.ndarray, np.ndarray]:
    a, b = _probs(p), _probs(q)
    if a.shape != b.shape:
        raise InvalidScale(f"Distributions have different lengths: {a.shape[0]} and {b.shape[0]}")
    return a, b


def smooth(v: Distribution, eps: float) -> np.ndarray:
    """Add ``eps`` to every level and renormalize."""
    a = _probs(v)
    return (a + eps) / (1.0 + eps * a.shape[0])


def entropy(v: Distribution) -> float:
    """Shannon entropy in bits, with ``0 * log 0 = 0``."""
    # abs(): entr(1) evaluates to -0.0
    return abs(float(stats.entropy(_probs(v), base=ENTROPY_BASE)))


def entropies(profile: np.ndarray) -> np.ndarray:
    """Row-wise entropies (bits) of a matrix whose rows are distributions."""
    return np.abs(stats.entropy(profile, base=ENTROPY_BASE, axis=1))


def max_entropy(K: int) -> float:
    """Entropy of the uniform distribution on K levels, ``log2(K)``."""
    return math.log2(K)


def kl(p: Distribution, q: Distribution, smoothing: float = 0.0) -> float:
    """Kullback-Leibler divergence KL(p || q) in bits.

    Raises:
        SupportMismatch: ``p`` has mass where ``q`` has none and ``smoothing`` is 0.
    """
    a, b = _pair(p, q)
    if smoothing > 0:
        a, b = smooth(a, smoothing), smooth(b, smoothing)
    else:
        bad = np.flatnonzero((a > 0) & (b == 0))
        if bad.size:
            raise SupportMismatch(int(bad[0]))
    return float(stats.entropy(a, b, base=ENTROPY_BASE))


def kl2(p: Distribution, q: Distribution, smoothing: float = 0.0) -> float:
    """Symmetrized KL divergence, the mean of both directions."""
    return (kl(p, q, smoothing) + kl(q, p, smoothing)) / 2


def mutual_information(joint: JointProbMatrix) -> float:
    """Mutual information (bits) between the two items of a joint distribution."""
    j = joint.probs
    independent = np.outer(j.sum(axis=1), j.sum(axis=0))
    return float(stats.entropy(j.ravel(), independent.ravel(), base=ENTROPY_BASE))


def variation_of_information_from_joint(joint: JointProbMatrix) -> float:
    """``H(first) + H(second) - 2 I``, clamped at 0 against rounding."""
    vi = (
        entropy(joint.first_marginal)
        + entropy(joint.second_marginal)
        - 2 * mutual_information(joint)
    )
    if -PROB_TOLERANCE < vi < 0:
        return 0.0
    return vi


def variation_of_information(m: ResponseMatrix, i: int, j: int) -> float:
    """Variation of information between items ``i`` and ``j`` (1-based), from their empirical joint."""
    return variation_of_information_from_joint(joint_item_distribution(m, i, j))


def bhattacharyya_coefficient(p: Distribution, q: Distribution) -> float:
    """Overlap ``F = sum_k sqrt(p_k q_k)``, in [0, 1]."""
    a, b = _pair(p, q)
    return float(np.sqrt(a * b).sum())


def bhattacharyya_distance(p: Distribution, q: Distribution) -> float:
    """``-ln F``.

    Raises:
        DisjointSupport: The distributions share no level (F = 0).
    """
    f = bhattacharyya_coefficient(p, q)
    if f == 0:
        raise DisjointSupport("Distributions have disjoint support; Bhattacharyya distance is infinite")
    return max(0.0, -math.log(f))


def total_variation(p: Distribution, q: Distribution) -> float:
    """Half the l1 distance, in [0, 1]."""
    a, b = _pair(p, q)
    return float(0.5 * np.abs(a - b).sum())


def hellinger(p: Distribution, q: Distribution) -> float:
    """``||sqrt(p) - sqrt(q)||_2 / sqrt(2)``, in [0, 1]."""
    a, b = _pair(p, q)
    return float(np.linalg.norm(np.sqrt(a) - np.sqrt(b)) / math.sqrt(2))
