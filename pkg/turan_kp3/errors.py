"""
Exception types raised by the library.

Everything derives from TuranError so the CLI can map any library failure to
exit code 2 with a one-line message.
"""


class TuranError(ValueError):
    """Base class for every error raised by turan_kp3"""


class GraphSizeError(TuranError):
    """Vertex count outside 0..MAX_ORDER, or a union/join that would overflow it"""


class InvalidVertexError(TuranError):
    """Vertex id outside 0..n-1"""


class Graph6Error(TuranError):
    """Malformed or truncated graph6 input"""


class FormulaDomainError(TuranError):
    """Arguments outside the domain of a closed-form value or bound"""


class InstanceTooLargeError(TuranError):
    """Instance exceeds the limit of an exhaustive (desk scale) routine"""


class PreconditionError(TuranError):
    """A lemma checker was handed a decomposition of the wrong shape"""
