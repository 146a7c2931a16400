"""Exception types raised by this package.

Every error the library raises deliberately derives from :class:`Error`,
so callers (and the CLI) can map failure kinds to exit codes.
"""


class Error(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(Error):
    """Operands have incompatible or invalid shapes."""


class GridFormatError(Error):
    """A grid is malformed: non-finite values or an unparseable text file."""


class ZeroNormError(Error):
    """A vector that must have nonzero norm is zero."""


class EmptyInputError(Error):
    """An input that must be non-empty is empty (head list, dataset, all-zero map)."""


class LabelRangeError(Error):
    """A class label is outside the valid range."""


class DatasetSpecError(Error):
    """A dataset specification is degenerate (e.g. shapes larger than the image)."""


class TraceMismatchError(Error):
    """A forward trace is replayed against a different model than produced it."""


class CheckpointError(Error):
    """A checkpoint file is missing, unreadable, or from an incompatible format."""


class ConfigParseError(Error):
    """A config file could not be read or parsed."""


class ConfigSchemaError(Error):
    """A config key or override does not match the declared schema."""


class TrainingDivergedError(Error):
    """Training produced a non-finite loss; carries the diagnostic dump path."""

    def __init__(self, message: str, dump_path=None):
        super().__init__(message)
        self.dump_path = dump_path


class ExportError(Error):
    """An artifact could not be written to disk."""
