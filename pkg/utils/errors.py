class SignedGraphError(Exception):
    """Base exception for every failure raised by the toolkit."""
    pass


class InvalidVertex(SignedGraphError):
    pass


class InvalidEdge(SignedGraphError):
    pass


class InvalidSignature(SignedGraphError):
    pass


class SizeLimitExceeded(SignedGraphError):
    pass


class IllegalContraction(SignedGraphError):
    pass


class NegativeLoopForbidden(SignedGraphError):
    pass


class UnsupportedInput(SignedGraphError):
    pass


class InvalidGenerator(SignedGraphError):
    pass


class InvalidGalleryArgs(SignedGraphError):
    pass


class InvalidSubset(SignedGraphError):
    pass


class MethodNotApplicable(SignedGraphError):
    pass


class BudgetExceeded(SignedGraphError):
    """Search budget ran out before the question was decided."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class IncompleteMapping(SignedGraphError):
    pass


class PreconditionFailed(SignedGraphError):
    pass


class InfeasibleClique(SignedGraphError):
    pass


class InvalidInputColoring(SignedGraphError):
    pass


class InvalidHomomorphism(SignedGraphError):
    pass


class NotAPartition(SignedGraphError):
    pass


class NotACut(SignedGraphError):
    pass


class UnboundedCandidate(SignedGraphError):
    pass


class InvariantViolation(SignedGraphError):
    """A step of a constructive proof did not hold on the given input."""
    pass


class SGraphParseError(SignedGraphError):
    """Malformed sgraph input; carries the offending line number."""

    def __init__(self, message: str, line_number: int = 0):
        super().__init__(f"line {line_number}: {message}" if line_number else message)
        self.line_number = line_number


class UnknownSuite(SignedGraphError):
    pass
