"""Exception types shared across the package."""


class QcorrError(Exception):
    """Base class for all errors raised by qcorr."""


class SizeCapError(QcorrError):
    """A requested object would exceed the configured dense-size cap."""


class NotHermitianError(QcorrError, ValueError):
    """Matrix is not Hermitian within tolerance."""


class TraceError(QcorrError, ValueError):
    """Matrix trace is not 1 within tolerance."""


class NotPositiveError(QcorrError, ValueError):
    """Matrix has an eigenvalue below the allowed negative tolerance."""


class NotNormalizedError(QcorrError, ValueError):
    """Amplitude vector is not normalized within tolerance."""


class PartitionError(QcorrError, ValueError):
    """Qubit partition is malformed or does not match the state."""


class PreconditionError(QcorrError, ValueError):
    """An operation's stated precondition or identity does not hold."""


class SpecParseError(QcorrError, ValueError):
    """A state-spec or partition string could not be parsed.

    `position` is the 0-based offset of the offending character.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class StateFileError(QcorrError, ValueError):
    """An amplitude file does not match the expected schema."""
