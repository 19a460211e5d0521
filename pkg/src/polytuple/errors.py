"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class PolytupleError(Exception):
    exit_code = 2


class InputError(PolytupleError, ValueError):
    """Malformed or out-of-contract input."""

    exit_code = 2


class ResourceError(PolytupleError):
    """A configured combinatorial or time budget was exceeded."""

    exit_code = 3


class NonTerminationError(ResourceError):
    """Resampling did not converge within ``max_rounds``."""


class SearchIndeterminate(PolytupleError):
    """Exact search ran out of budget before reaching a verdict.

    This is never a proof of non-existence.
    """

    exit_code = 4

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class ShrinkabilityViolation(PolytupleError):
    """No sub-edge of the requested size exists."""

    exit_code = 1


class CertificationError(PolytupleError):
    """A produced object failed its a-posteriori certificate."""

    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
