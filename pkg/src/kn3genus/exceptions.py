"""Exception types shared across the package."""


class Kn3Error(Exception):
    """Base class for all domain errors raised by this package."""


class OddOrder(Kn3Error):
    """The requested vertex count is odd; only even orders are supported."""


class UnsupportedCase(Kn3Error):
    """A parameter combination outside the supported constructions."""


class MismatchedAmbient(Kn3Error):
    """Two circuits live in different ambient graphs (n or m differ)."""


class VertexAbsent(Kn3Error):
    """A queried vertex does not occur in the circuit."""


class NotAnEmbeddingSet(Kn3Error):
    """A circuit family failed embedding-set validation."""


class NotQuadrilateral(Kn3Error):
    """A scheme has a face of length other than 4."""


class Disconnected(Kn3Error):
    """The underlying graph of a scheme is not connected."""


class GraphMismatch(Kn3Error):
    """Two schemes are defined on different labelled graphs."""


class BoundExceeded(Kn3Error):
    """An exhaustive search was requested beyond its configured bound."""


class NoCommonTransition(Kn3Error):
    """The multi-edge splice found no shared transition (indicates a bug)."""


class CopyResolutionError(Kn3Error):
    """Parallel-edge copy indices could not be assigned to a circuit family."""


class FormatError(Kn3Error):
    """A text file does not conform to one of the package formats."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
