"""Exception hierarchy shared by the library and the command line."""


class PreprojError(Exception):
    """Base class; ``status`` is the report status used by the CLI."""

    status = "invalid-input"


class InvalidInput(PreprojError, ValueError):
    status = "invalid-input"


class NotApplicable(PreprojError):
    """The input is well formed but the operation does not apply to it."""

    status = "not-applicable"


class InconsistentInput(NotApplicable):
    """A module whose dimension vector cannot occur for its socle."""


class Unclassifiable(NotApplicable):
    """No tableau has the Hom signature of the given module."""

    def __init__(self, message: str, signature: dict | None = None):
        super().__init__(message)
        self.signature = signature or {}


class TheoremViolation(PreprojError):
    """A computation contradicted a proven statement; indicates a bug."""

    status = "theorem-violation"
