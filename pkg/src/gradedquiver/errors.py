"""Exception hierarchy shared across the package.

Two families matter for the CLI exit-code contract: `MathRefusal` (a stated
precondition is not met: truncated windows, wrong verdicts, non-finite data)
maps to exit code 1, `InputError` (malformed problem data) to exit code 2.
"""


class GradedQuiverError(Exception):
    pass


class MathRefusal(GradedQuiverError):
    """The requested computation is refused on mathematical grounds."""


class InputError(GradedQuiverError):
    """Malformed input data (parsing, schema, dangling references)."""


class FieldMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class WindowError(MathRefusal):
    """A window or truncation flag makes the answer uncomputable as asked."""


class UnsupportedRadical(MathRefusal):
    """Radical computation outside its validity range (0 < char <= dim)."""
