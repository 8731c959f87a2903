"""Response matrix module: Likert scale, matrix validation, CSV ingestion."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from reliability.errors import (
    Empty,
    IndexOutOfRange,
    InvalidCell,
    InvalidScale,
    OutOfRange,
    ParseError,
    RaggedRows,
)

logger = logging.getLogger(__name__)

DEFAULT_DELIMITER = ","
DEFAULT_LEVELS = 5


@dataclass(frozen=True)
class LikertScale:
    """Ordered response levels ``1..K``."""

    K: int = DEFAULT_LEVELS

    def __post_init__(self) -> None:
        if isinstance(self.K, bool) or not isinstance(self.K, (int, np.integer)):
            raise InvalidScale(f"K must be an integer, got {self.K!r}")
        if self.K < 2:
            raise InvalidScale(f"K must be at least 2, got {self.K}")

    @property
    def levels(self) -> np.ndarray:
        """Levels ``1..K`` as an int array."""
        return np.arange(1, self.K + 1)


class ResponseMatrix:
    """Immutable n×p matrix of Likert responses.

    Entry ``(i, j)`` holds respondent i's answer to item j as a level in
    ``1..K``. Item and respondent indices in the public API are 1-based,
    matching level numbering.
    """

    def __init__(self, entries: np.ndarray | list, scale: LikertScale) -> None:
        arr = np.asarray(entries)
        if arr.ndim != 2:
            raise InvalidCell(f"Response matrix must be 2-dimensional, got {arr.ndim} dimension(s)")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise Empty("Response matrix has no rows or no columns")

        if arr.dtype.kind == "f":
            if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
                bad = np.argwhere(~np.isfinite(arr) | (arr != np.round(arr)))[0]
                raise InvalidCell(
                    f"Non-integer value {arr[tuple(bad)]!r} at row {bad[0] + 1}, column {bad[1] + 1}",
                    row=int(bad[0]) + 1,
                    column=int(bad[1]) + 1,
                )
        elif arr.dtype.kind not in "iu":
            raise InvalidCell(f"Response matrix entries must be integers, got dtype {arr.dtype}")

        data = arr.astype(np.int64, copy=True)
        outside = (data < 1) | (data > scale.K)
        if outside.any():
            r, c = np.argwhere(outside)[0]
            raise OutOfRange(
                f"Value {data[r, c]} at row {r + 1}, column {c + 1} is outside 1..{scale.K}",
                row=int(r) + 1,
                column=int(c) + 1,
            )
        data.flags.writeable = False
        self._entries = data
        self._scale = scale

    @property
    def entries(self) -> np.ndarray:
        """Read-only int64 array of shape (n, p)."""
        return self._entries

    @property
    def scale(self) -> LikertScale:
        return self._scale

    @property
    def K(self) -> int:
        return self._scale.K

    @property
    def n(self) -> int:
        """Number of respondents (rows)."""
        return self._entries.shape[0]

    @property
    def p(self) -> int:
        """Number of items (columns)."""
        return self._entries.shape[1]

    @cached_property
    def item_counts(self) -> np.ndarray:
        """(p, K) array; entry (j, k) counts respondents answering level k+1 on item j."""
        onehot = self._entries[:, :, None] == self._scale.levels
        return onehot.sum(axis=0)

    @cached_property
    def respondent_counts(self) -> np.ndarray:
        """(n, K) array; entry (i, k) counts items respondent i answered with level k+1."""
        onehot = self._entries[:, :, None] == self._scale.levels
        return onehot.sum(axis=1)

    def column(self, j: int) -> np.ndarray:
        """Responses to item ``j`` (1-based)."""
        return self._entries[:, check_index(j, self.p, "item")]

    def row(self, i: int) -> np.ndarray:
        """Responses of respondent ``i`` (1-based)."""
        return self._entries[check_index(i, self.n, "respondent"), :]

    def transpose(self) -> ResponseMatrix:
        """Return the p×n matrix with respondents and items swapped."""
        return ResponseMatrix(self._entries.T, self._scale)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResponseMatrix):
            return NotImplemented
        return self._scale == other._scale and np.array_equal(self._entries, other._entries)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ResponseMatrix(n={self.n}, p={self.p}, K={self.K})"


def check_index(index: int, size: int, what: str) -> int:
    """Validate a 1-based index against ``size`` and return the 0-based position."""
    if isinstance(index, bool) or not isinstance(index, (int, np.integer)):
        raise IndexOutOfRange(f"{what} index must be an integer, got {index!r}")
    if not 1 <= index <= size:
        raise IndexOutOfRange(f"{what} index {index} is outside 1..{size}")
    return int(index) - 1


def transpose(m: ResponseMatrix) -> ResponseMatrix:
    """Swap respondents and items; ``transpose(transpose(m)) == m``."""
    return m.transpose()


def _parse_int(token: str) -> int | None:
    token = token.strip()
    if not token:
        return None
    try:
        return int(token)
    except ValueError:
        return None


def parse_csv(
    text: str,
    scale: LikertScale,
    delimiter: str = DEFAULT_DELIMITER,
    source: str | None = None,
) -> ResponseMatrix:
    """Parse delimiter-separated integer rows into a validated ResponseMatrix.

    The first non-blank row is treated as a header (and skipped) when any of
    its non-blank tokens is not an integer. Entirely blank lines are ignored;
    a blank cell inside a data row is an error, including in the first row.

    Args:
        text: CSV text, one respondent per row, one item per column.
        scale: Likert scale the entries must lie in.
        delimiter: Field separator.
        source: Optional file name used for ``path:line`` error context.

    Raises:
        RaggedRows: A data row's length differs from the first data row.
        OutOfRange: A cell is an integer outside ``1..K``.
        InvalidCell: A data cell is blank or not an integer.
        Empty: No data rows remain.
    """
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    rows: list[list[int]] = []
    width: int | None = None
    header_checked = False

    for tokens in reader:
        line = reader.line_num
        if not tokens or (len(tokens) == 1 and not tokens[0].strip()):
            continue

        values = [_parse_int(t) for t in tokens]
        if not header_checked:
            header_checked = True
            if any(v is None and t.strip() for t, v in zip(tokens, values)):
                logger.debug("Skipping header row: %s", tokens)
                continue

        row_no = len(rows) + 1
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise RaggedRows(
                f"row {row_no} has {len(values)} columns, expected {width}",
                row=row_no,
                source=source,
                line=line,
            )

        for col_no, (token, value) in enumerate(zip(tokens, values), start=1):
            if value is None:
                raise InvalidCell(
                    f"cell at row {row_no}, column {col_no} is not an integer: {token!r}",
                    row=row_no,
                    column=col_no,
                    source=source,
                    line=line,
                )
            if not 1 <= value <= scale.K:
                raise OutOfRange(
                    f"value {value} at row {row_no}, column {col_no} is outside 1..{scale.K}",
                    row=row_no,
                    column=col_no,
                    source=source,
                    line=line,
                )
        rows.append(values)  # type: ignore[arg-type]

    if not rows:
        raise Empty("no data rows", source=source, line=None)

    return ResponseMatrix(np.array(rows, dtype=np.int64), scale)


def read_csv(
    path: str | Path,
    scale: LikertScale,
    delimiter: str = DEFAULT_DELIMITER,
) -> ResponseMatrix:
    """Read a UTF-8 CSV file into a ResponseMatrix (see parse_csv)."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not valid UTF-8 (byte {e.start})", source=str(path)) from e
    m = parse_csv(text, scale, delimiter=delimiter, source=str(path))
    logger.info("Loaded %s: %d respondents x %d items, K=%d", path.name, m.n, m.p, m.K)
    return m


def item_labels(p: int) -> list[str]:
    """Column labels ``item_1..item_p`` used for headers."""
    return [f"item_{j}" for j in range(1, p + 1)]


def serialize(m: ResponseMatrix, delimiter: str = DEFAULT_DELIMITER, header: bool = True) -> str:
    """Render ``m`` as CSV text that parse_csv reads back to an equal matrix."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    if header:
        writer.writerow(item_labels(m.p))
    writer.writerows(m.entries.tolist())
    return buf.getvalue()
