"""Exception hierarchy.

Errors that signal a violated precondition carry a :class:`Witness` that
re-verifies against the offending relation; the CLI prints it and exits
with status 3.
"""

from __future__ import annotations


class OrderError(Exception):
    """Base class for every error raised by this package."""


class GroundSetMismatch(OrderError, ValueError):
    pass


class PreconditionError(OrderError):
    """An input lacks a property the operation requires."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CyclicInput(PreconditionError):
    pass


class SymmetricPairError(PreconditionError):
    pass


class NotIntervalOrder(PreconditionError):
    pass


class NotSemiorder(PreconditionError):
    pass


class MemberNotLinear(PreconditionError):
    pass


class RealizerInvalid(PreconditionError):
    pass


class NoDecompositionFound(PreconditionError):
    """Exhaustive search found no (linear, partner) pair.

    ``nodes`` is the size of the explored search tree; ``exhaustive`` is
    true when no budget cut the search short.
    """

    def __init__(self, message: str, nodes: int, exhaustive: bool = True):
        super().__init__(message)
        self.nodes = nodes
        self.exhaustive = exhaustive


class MemberConstructionFailed(PreconditionError):
    pass


class EmptyFamily(PreconditionError, ValueError):
    pass


class LimitError(OrderError):
    """A size cap or search budget was hit; no unverified answer is returned."""


class SizeLimit(LimitError):
    pass


class SearchBudgetExhausted(LimitError):
    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


class InternalError(OrderError, AssertionError):
    """A round invariant that the construction relies on failed."""


class InternalSaturationCycle(InternalError):
    pass


class InternalOperatorFailure(InternalError):
    pass


class InfeasibleSystem(InternalError):
    pass


class InputError(OrderError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, position: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.position = position


class UnknownElement(InputError):
    pass


class DuplicateElement(InputError):
    pass


class UnsupportedCombination(InputError):
    pass
