"""Exception hierarchy. Everything raised on bad input derives from ProbCatError."""


class ProbCatError(ValueError):
    pass


class InvalidGenerator(ProbCatError):
    pass


class InvalidSpace(ProbCatError):
    pass


class NotMeasurable(ProbCatError):
    pass


class NullViolation(ProbCatError):
    """A null atom of the domain has a preimage of positive measure."""

    def __init__(self, message, atom=None):
        super().__init__(message)
        self.atom = atom


class SpaceMismatch(ProbCatError):
    pass


class NotCoarser(ProbCatError):
    pass


class HorizonExceeded(ProbCatError):
    pass


class InvalidP(ProbCatError):
    pass


class BadIndices(ProbCatError):
    pass
