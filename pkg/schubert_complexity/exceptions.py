"""
Error hierarchy for Schubert Complexity.

Domain errors map to CLI exit status 1, parse errors to exit status 2.
ConsistencyError means two independent computations disagreed and is a bug.
"""


class SchubertError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class DomainError(SchubertError, ValueError):
    """Input is well-formed but violates a mathematical precondition."""


class SizeMismatchError(DomainError):
    """Permutations of different sizes were combined."""


class NotBruhatLeqError(DomainError):
    """An interval [v, w] was requested with v not below w."""

    def __init__(self, v: object, w: object):
        super().__init__(f"{v} is not below {w} in Bruhat order")
        self.v = v
        self.w = w


class NotToricError(DomainError):
    """An operation that needs a toric variety got a non-toric one."""


class ShapeError(DomainError):
    """A diagram, permutation or statement does not have the required shape."""


class UnexpectedZerosError(DomainError):
    """Analytics that assume no unexpected zeros were asked on a pair with some."""


class MinorSizeLimitError(DomainError):
    """A symbolic minor expansion exceeds the configured submatrix size."""


class DirectedCycleError(DomainError):
    """Edge cones are only defined for acyclic directed graphs."""


class NotBipartiteError(DomainError):
    """A bipartite-only predicate was given a non-bipartite graph."""


class ChainError(DomainError):
    """A chain contains a step that is not a Bruhat cover."""


class UnknownTheoremError(DomainError, KeyError):
    """No oracle theorem is registered under the requested id."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class PermutationParseError(SchubertError, ValueError):
    """Text could not be read as a permutation in one-line notation."""

    exit_code = 2

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(f"cannot parse '{text}' at position {position}: {reason}")
        self.text = text
        self.position = position
        self.reason = reason


class ConsistencyError(SchubertError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
