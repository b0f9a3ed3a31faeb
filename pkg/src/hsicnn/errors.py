"""Exception taxonomy shared by the whole package.

The CLI maps these onto process exit codes, so every raise site should pick
the class that matches what went wrong rather than a bare ValueError.
"""


class HsiError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ConfigError(HsiError):
    """Invalid parameter or configuration value (bad flag, even patch size, ...)."""

    exit_code = 2


class DataError(HsiError):
    """Input data violates a contract (label out of range, empty set, ...)."""

    exit_code = 3


class FormatError(DataError):
    """A file does not parse as the declared format or fails its length checks."""


class ShapeError(DataError):
    """Array shapes are incompatible with the requested operation."""


class StructureError(DataError):
    """A model's layer structure does not support the requested operation."""


class NumericError(HsiError):
    """A numeric failure: non-finite loss, eigensolver non-convergence, ..."""

    exit_code = 4


class VerificationError(HsiError):
    """One or more self-verification checks failed."""

    exit_code = 5
