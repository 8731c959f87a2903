"""Benchmark generator and fraction sweep comparing the ICR variants with Cronbach alpha.

Each benchmark matrix starts as i.i.d. uniform responses; a fraction c of the
columns is then overwritten by one shared random column, so those items agree
perfectly for every respondent.

Random streams: ``numpy.random.Generator(PCG64)`` seeded with
``SeedSequence(seed, spawn_key=(fraction_key(c), replicate))``, where
``fraction_key(c)`` is c in parts per million. A matrix is therefore fully
determined by (seed, c, replicate) and does not depend on which other
fractions a sweep contains.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Any

import numpy as np
import pandas as pd

from reliability.core.classical import cronbach_alpha
from reliability.core.icr import VARIANTS, _round_sig, icr_values
from reliability.core.response_matrix import LikertScale, ResponseMatrix
from reliability.errors import InvalidConfig, InvalidScale, ReliabilityError

logger = logging.getLogger(__name__)

DEFAULT_FRACTIONS: tuple[float, ...] = tuple(k / 10 for k in range(1, 11))
DEFAULT_SEED = 20170503
INDEX_NAMES: tuple[str, ...] = tuple(v.name for v in VARIANTS) + ("cronbach",)


@dataclass(frozen=True)
class SimConfig:
    """Parameters of a benchmark sweep."""

    n: int = 1000
    p: int = 50
    K: int = 5
    fractions: tuple[float, ...] = DEFAULT_FRACTIONS
    seed: int = DEFAULT_SEED
    replicates: int = 10

    def __post_init__(self) -> None:
        object.__setattr__(self, "fractions", tuple(float(c) for c in self.fractions))
        if self.n < 2:
            raise InvalidConfig(f"n must be at least 2, got {self.n}")
        if self.p < 2:
            raise InvalidConfig(f"p must be at least 2, got {self.p}")
        try:
            LikertScale(self.K)
        except InvalidScale as e:
            raise InvalidConfig(str(e)) from e
        if not self.fractions:
            raise InvalidConfig("at least one fraction is required")
        for c in self.fractions:
            _check_fraction(c)
            if math.ceil(c * self.p) < 1:
                raise InvalidConfig(f"fraction {c} selects no columns of {self.p}")
        if self.replicates < 1:
            raise InvalidConfig(f"replicates must be positive, got {self.replicates}")
        if self.seed < 0:
            raise InvalidConfig(f"seed must be non-negative, got {self.seed}")


def _check_fraction(c: float) -> None:
    if not 0.0 < c <= 1.0:
        raise InvalidConfig(f"fraction must lie in (0, 1], got {c}")


def duplicated_count(c: float, p: int) -> int:
    """Number of replaced columns, ``round(c * p)`` rounding halves up."""
    return int((Decimal(str(c)) * p).quantize(Decimal(1), rounding=ROUND_HALF_UP))


def fraction_key(c: float) -> int:
    """Fraction in parts per million, used in the sub-seed."""
    return int((Decimal(str(c)) * 1_000_000).quantize(Decimal(1), rounding=ROUND_HALF_UP))


def replicate_rng(seed: int, c: float, replicate: int) -> np.random.Generator:
    """Independent generator for one (fraction, replicate) cell of a sweep."""
    sequence = np.random.SeedSequence(seed, spawn_key=(fraction_key(c), replicate))
    return np.random.Generator(np.random.PCG64(sequence))


def generate_benchmark(cfg: SimConfig, c: float, replicate: int = 0) -> ResponseMatrix:
    """Draw an n×p uniform matrix and overwrite ``round(c*p)`` random columns with one shared column.

    The shared column is itself uniform across respondents, so replaced items
    are constant within each respondent's row but vary between respondents.
    """
    _check_fraction(c)
    rng = replicate_rng(cfg.seed, c, replicate)
    x = rng.integers(1, cfg.K + 1, size=(cfg.n, cfg.p))
    d = duplicated_count(c, cfg.p)
    if d:
        columns = rng.permutation(cfg.p)[:d]
        shared = rng.integers(1, cfg.K + 1, size=cfg.n)
        x[:, columns] = shared[:, None]
    return ResponseMatrix(x, LikertScale(cfg.K))


def cronbach_closed_form(p: int, d: int) -> float:
    """Population Cronbach alpha of the benchmark with ``d`` duplicated columns out of ``p``."""
    return (p / (p - 1)) * (1 - p / (d * d + p - d))


@dataclass(frozen=True)
class SweepRow:
    """Aggregated indices for one fraction.

    ``means`` and ``stddevs`` are keyed by index name (phi1..phi4, cronbach).
    A mean is NaN when every replicate was degenerate; ``degenerate`` counts
    degenerate replicates per index. ``stddevs`` is empty for a single replicate.
    """

    fraction: float
    replicates: int
    means: dict[str, float]
    stddevs: dict[str, float] = field(default_factory=dict)
    degenerate: dict[str, int] = field(default_factory=dict)
    cronbach_expected: float = math.nan

    @property
    def phi1(self) -> float:
        return self.means["phi1"]

    @property
    def phi2(self) -> float:
        return self.means["phi2"]

    @property
    def phi3(self) -> float:
        return self.means["phi3"]

    @property
    def phi4(self) -> float:
        return self.means["phi4"]

    @property
    def cronbach(self) -> float:
        return self.means["cronbach"]

    def to_dict(self, precision: int | None = None) -> dict[str, Any]:
        """JSON-ready mapping; NaN becomes None and ``precision`` rounds to significant digits."""

        def r(value: float) -> float | None:
            return None if math.isnan(value) else _round_sig(value, precision)

        return {
            "fraction": self.fraction,
            "replicates": self.replicates,
            "means": {name: r(v) for name, v in self.means.items()},
            "stddevs": {name: r(v) for name, v in self.stddevs.items()},
            "degenerate": dict(self.degenerate),
            "cronbach_expected": r(self.cronbach_expected),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SweepRow:
        def f(value: float | None) -> float:
            return math.nan if value is None else float(value)

        return cls(
            fraction=float(data["fraction"]),
            replicates=int(data["replicates"]),
            means={name: f(v) for name, v in data["means"].items()},
            stddevs={name: f(v) for name, v in data.get("stddevs", {}).items()},
            degenerate={name: int(v) for name, v in data.get("degenerate", {}).items()},
            cronbach_expected=f(data.get("cronbach_expected")),
        )



def replicate_indices(m: ResponseMatrix) -> dict[str, float | ReliabilityError]:
    """phi1..phi4 and Cronbach alpha of one matrix; degenerate values map to their error."""
    values = icr_values(m)
    try:
        values["cronbach"] = cronbach_alpha(m)
    except ReliabilityError as e:
        values["cronbach"] = e
    return values


def run_sweep(
    cfg: SimConfig,
    progress_callback: Callable[[int, int], None] | None = None,
) -> list[SweepRow]:
    """Run ``cfg.replicates`` benchmarks per fraction and aggregate each index.

    Args:
        cfg: Sweep parameters.
        progress_callback: Optional callback(done, total) after every replicate.

    Returns:
        One row per fraction, ordered by fraction.
    """
    fractions = sorted(cfg.fractions)
    total = len(fractions) * cfg.replicates
    done = 0
    rows: list[SweepRow] = []

    for c in fractions:
        samples: dict[str, list[float]] = {name: [] for name in INDEX_NAMES}
        degenerate = dict.fromkeys(INDEX_NAMES, 0)
        for r in range(cfg.replicates):
            m = generate_benchmark(cfg, c, replicate=r)
            for name, value in replicate_indices(m).items():
                if isinstance(value, ReliabilityError):
                    degenerate[name] += 1
                else:
                    samples[name].append(value)
            done += 1
            if progress_callback is not None:
                progress_callback(done, total)

        means = {name: float(np.mean(v)) if v else math.nan for name, v in samples.items()}
        stddevs: dict[str, float] = {}
        if cfg.replicates > 1:
            stddevs = {
                name: float(np.std(v, ddof=1)) if len(v) > 1 else math.nan
                for name, v in samples.items()
            }
        for name, count in degenerate.items():
            if count:
                logger.warning("fraction %g: %s degenerate in %d of %d replicates", c, name, count, cfg.replicates)

        row = SweepRow(
            fraction=c,
            replicates=cfg.replicates,
            means=means,
            stddevs=stddevs,
            degenerate={k: v for k, v in degenerate.items() if v},
            cronbach_expected=cronbach_closed_form(cfg.p, duplicated_count(c, cfg.p)),
        )
        logger.debug("fraction %g: %s", c, means)
        rows.append(row)

    return rows


def sweep_frame(rows: Sequence[SweepRow]) -> pd.DataFrame:
    """One row per fraction: fraction, phi1..phi4, cronbach, cronbach_expected, then ``*_sd`` columns."""
    records = []
    for row in rows:
        record: dict[str, float] = {"fraction": row.fraction}
        record.update({name: row.means[name] for name in INDEX_NAMES})
        record["cronbach_expected"] = row.cronbach_expected
        if row.stddevs:
            record.update({f"{name}_sd": row.stddevs[name] for name in INDEX_NAMES})
        records.append(record)
    return pd.DataFrame.from_records(records)


def sweep_table(rows: Sequence[SweepRow]) -> pd.DataFrame:
    """Indices as rows and fraction percentages as columns."""
    frame = sweep_frame(rows).set_index("fraction")[list(INDEX_NAMES)]
    table = frame.T
    table.columns = [f"{round(c * 100):d}" for c in table.columns]
    table.index.name = "Fraction"
    return table


def tidy_plot_data(rows: Sequence[SweepRow]) -> pd.DataFrame:
    """Long-format (fraction, index_name, value) table of the means."""
    frame = sweep_frame(rows)[["fraction", *INDEX_NAMES]]
    return frame.melt(id_vars="fraction", var_name="index_name", value_name="value")
