"""Exception types raised by the library.

Every error derives from :class:`ValueLatticeError` so callers (and the CLI)
can separate domain failures from programming mistakes.
"""


class ValueLatticeError(Exception):
    """Base class for all domain errors."""


class CycleError(ValueLatticeError):
    """The closure of a relation is not antisymmetric."""


class UnknownElement(ValueLatticeError):
    pass


class SizeExceeded(ValueLatticeError):
    """A carrier or enumeration would exceed its configured cap."""


class LabelCollision(ValueLatticeError):
    pass


class DuplicateIndex(ValueLatticeError):
    pass


class UnknownIndex(ValueLatticeError):
    pass


class ValueNotInDimension(ValueLatticeError):
    pass


class AmbiguousValue(ValueLatticeError):
    """A plain value matches more than one element of a dimension."""


class NotInDomain(ValueLatticeError):
    pass


class LrvMismatch(ValueLatticeError):
    pass


class NotAJoinSemilattice(ValueLatticeError):
    pass


class IncompleteProfile(ValueLatticeError):
    pass


class PhaseError(ValueLatticeError):
    pass


class DuplicateName(ValueLatticeError):
    pass


class UnknownName(ValueLatticeError):
    pass


class ParseError(ValueLatticeError):
    """Syntax error in a ``.vdl`` document, with a 1-based position."""

    def __init__(self, line: int, column: int, expected: str, found: str):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        super().__init__(f"line {line}, column {column}: expected {expected}, found {found!r}")
