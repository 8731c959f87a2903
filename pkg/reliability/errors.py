"""Exception hierarchy for the reliability toolkit.

Every error carries a stable ``code`` (printed by the CLI) and the process
``exit_code`` the CLI returns when the error reaches it.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DEGENERATE = 3


class ReliabilityError(ValueError):
    """Base class for all toolkit errors."""

    code: str = "ReliabilityError"
    exit_code: int = EXIT_DATA


# ── Data model ───────────────────────────────────────────────────────


class InvalidScale(ReliabilityError):
    code = "InvalidScale"
    exit_code = EXIT_USAGE


class ParseError(ReliabilityError):
    """Error raised while reading a response matrix.

    Args:
        message: Human readable description.
        row: 1-based data row the error refers to, if any.
        column: 1-based column the error refers to, if any.
        source: Optional file name used as ``path:line`` context.
        line: 1-based physical line in the source text, if known.
    """

    code = "ParseError"

    def __init__(
        self,
        message: str,
        row: int | None = None,
        column: int | None = None,
        source: str | None = None,
        line: int | None = None,
    ) -> None:
        self.row = row
        self.column = column
        self.source = source
        self.line = line
        if source is not None and line is not None:
            message = f"{source}:{line}: {message}"
        super().__init__(message)


class RaggedRows(ParseError):
    code = "RaggedRows"


class OutOfRange(ParseError):
    code = "OutOfRange"


class InvalidCell(ParseError):
    code = "InvalidCell"


class Empty(ParseError):
    code = "Empty"


class IndexOutOfRange(ReliabilityError, IndexError):
    code = "IndexOutOfRange"


# ── Computation preconditions ────────────────────────────────────────


class TooFewItems(ReliabilityError):
    code = "TooFewItems"


class TooFewRespondents(ReliabilityError):
    code = "TooFewRespondents"


class DegenerateTotalVariance(ReliabilityError):
    code = "DegenerateTotalVariance"
    exit_code = EXIT_DEGENERATE


class DegenerateModalEntropy(ReliabilityError):
    code = "DegenerateModalEntropy"
    exit_code = EXIT_DEGENERATE


class SupportMismatch(ReliabilityError):
    """KL support violation: ``p[index] > 0`` while ``q[index] == 0``."""

    code = "SupportMismatch"
    exit_code = EXIT_DEGENERATE

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(
            f"p has mass at level {index + 1} where q has none; "
            "use smoothing to compare these distributions"
        )


class DisjointSupport(ReliabilityError):
    code = "DisjointSupport"
    exit_code = EXIT_DEGENERATE


# ── Configuration ────────────────────────────────────────────────────


class InvalidConfig(ReliabilityError):
    code = "InvalidConfig"
    exit_code = EXIT_USAGE


class UnknownMeasure(ReliabilityError, KeyError):
    code = "UnknownMeasure"
    exit_code = EXIT_USAGE

    def __str__(self) -> str:
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ""
