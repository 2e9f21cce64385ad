"""Exception hierarchy for the whole package."""


class LocdecError(Exception):
    """Base class for every error raised by locdec."""


class EmptyLabels(LocdecError, ValueError):
    pass


class BadEdge(LocdecError, ValueError):
    pass


class BadLabel(LocdecError, ValueError):
    pass


class DuplicateId(LocdecError, ValueError):
    """Two nodes share an ID where the ID mode forbids it.

    ``ball`` holds the root and members of the offending ball in local
    mode (``None`` in global mode).
    """

    def __init__(self, message, ball=None):
        super().__init__(message)
        self.ball = ball


class IdOutOfRange(LocdecError, ValueError):
    pass


class UniverseTooLarge(LocdecError):
    pass


class SpaceTooLarge(LocdecError):
    pass


class RadiusMismatch(LocdecError, ValueError):
    pass


class MissingN(LocdecError, ValueError):
    pass


class NonPositiveLeading(LocdecError, ValueError):
    pass


class NotAPath(LocdecError, ValueError):
    pass


class NotColorable(LocdecError, ValueError):
    pass


class WordTooLong(LocdecError, ValueError):
    pass


class NonHaltingInput(LocdecError, ValueError):
    pass


class AlreadyHalted(LocdecError):
    pass


class MalformedEncoding(LocdecError, ValueError):
    pass


class BoundNotMonotoneAtN(LocdecError, ValueError):
    pass


class CoverFailed(LocdecError):
    pass


class UnknownExperiment(LocdecError, KeyError):
    pass
