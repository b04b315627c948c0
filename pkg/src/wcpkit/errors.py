"""Exception hierarchy.  Mathematical failures of a checked identity are
report entries, not exceptions; these are raised only for malformed input
or for operations whose preconditions do not hold."""


class WcpError(Exception):
    pass


class ShapeError(WcpError, ValueError):
    pass


class NotIdempotentError(WcpError, ValueError):
    def __init__(self, msg, defect=None):
        super().__init__(msg)
        self.defect = defect


class PreconditionError(WcpError):
    """A required condition failed; ``report`` holds the failing entries."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class InvariantError(WcpError):
    """A consequence that should follow from verified hypotheses did not hold."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class TransportError(PreconditionError):
    pass


class ConvolutionError(PreconditionError):
    pass
