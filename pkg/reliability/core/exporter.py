"""Exporter module for writing reports, distance matrices and sweep results."""

from __future__ import annotations

import json
import logging
from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from reliability.core.distances import DistanceMatrix
from reliability.core.distributions import item_profile
from reliability.core.icr import ReliabilityReport, item_entropies
from reliability.core.response_matrix import ResponseMatrix, item_labels
from reliability.core.simulation import SweepRow, sweep_frame, sweep_table, tidy_plot_data

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 6
NA_REP = "NA"
FORMATS = ("json", "csv")


def _write(text: str, output_path: str | Path | None) -> str:
    """Write ``text`` to ``output_path`` when given; always return it."""
    if output_path is not None:
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", output_path)
    return text


class Exporter:
    """Renders result objects as JSON or CSV text, optionally writing them to files.

    Args:
        precision: Significant digits for floating-point output; None keeps full precision.
        delimiter: Field separator for CSV output.
    """

    def __init__(self, precision: int | None = DEFAULT_PRECISION, delimiter: str = ",") -> None:
        self._precision = precision
        self._delimiter = delimiter

    @property
    def _float_format(self) -> str | None:
        return None if self._precision is None else f"%.{self._precision}g"

    def _csv(self, frame: pd.DataFrame, index: bool = False) -> str:
        return frame.to_csv(
            sep=self._delimiter,
            index=index,
            float_format=self._float_format,
            na_rep=NA_REP,
            lineterminator="\n",
        )

    def export_report(
        self,
        report: ReliabilityReport,
        output_path: str | Path | None = None,
        fmt: str = "json",
    ) -> str:
        """Render a report as indented JSON or as a one-row CSV (header + data row)."""
        if fmt == "json":
            text = json.dumps(report.to_dict(self._precision), indent=2) + "\n"
        elif fmt == "csv":
            text = self._csv(pd.DataFrame([report.to_flat_row()]))
        else:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
        return _write(text, output_path)

    def export_distances(self, dm: DistanceMatrix, output_path: str | Path | None = None) -> str:
        """p×p CSV with item labels as header row and first column; undefined cells are NA."""
        frame = pd.DataFrame(dm.values, index=dm.labels, columns=dm.labels)
        frame.index.name = dm.measure
        return _write(self._csv(frame, index=True), output_path)

    def export_profile(self, m: ResponseMatrix, output_path: str | Path | None = None) -> str:
        """One row per item: level frequencies ``level_1..level_K`` and entropy (bits)."""
        frame = pd.DataFrame(
            item_profile(m),
            index=item_labels(m.p),
            columns=[f"level_{k}" for k in range(1, m.K + 1)],
        )
        frame["entropy"] = item_entropies(m)
        frame.index.name = "item"
        return _write(self._csv(frame, index=True), output_path)

    def export_sweep(
        self,
        rows: Sequence[SweepRow],
        output_path: str | Path | None = None,
        plot_path: str | Path | None = None,
        fmt: str = "csv",
    ) -> str:
        """Write the per-fraction sweep (CSV or JSON) and, optionally, the tidy plot CSV."""
        if fmt == "csv":
            text = self._csv(sweep_frame(rows))
        elif fmt == "json":
            text = json.dumps([row.to_dict(self._precision) for row in rows], indent=2) + "\n"
        else:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
        _write(text, output_path)
        if plot_path is not None:
            _write(self._csv(tidy_plot_data(rows)), plot_path)
        return text

    def format_sweep_table(self, rows: Sequence[SweepRow], decimals: int = 3) -> str:
        """Fixed-width grid with the indices as rows and fraction percentages as columns."""
        table = sweep_table(rows)
        return table.to_string(float_format=lambda v: f"{v:.{decimals}f}", na_rep=NA_REP) + "\n"
