class HomlyError(Exception):
    """Base class for every error raised by the package."""


class MalformedScalarError(HomlyError, ValueError):
    pass


class DimensionMismatchError(HomlyError, ValueError):
    pass


class SuiteInapplicableError(HomlyError):
    """The algebra lacks an operation the requested suite needs."""


class UnknownSuiteError(HomlyError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown suite"


class PreconditionError(HomlyError):
    """A construction was given inputs that violate its hypotheses."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class TooManyCandidatesError(HomlyError):
    pass


class DocumentError(HomlyError, ValueError):
    """A JSON document does not match the expected schema."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
