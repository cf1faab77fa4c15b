"""Exception types raised across the package."""


class InvalidSimplex(ValueError):
    """A vertex tuple violates the nondecreasing/nonempty contract."""


class NotInComplex(ValueError):
    """A simplex passed as a member of a complex is not one."""


class SupportNotInComplex(ValueError):
    """A cochain's support contains a simplex outside the complex."""


class DimensionMismatch(ValueError):
    """An operand's dimension is incompatible with the operation."""


class InvalidTuple(ValueError):
    """Index sequences must be strictly increasing inside [0, m]."""


class MalformedPair(ValueError):
    """A word pair does not interleave back into a single valid word."""


class NotACocycle(ValueError):
    """Raised when an operation requires a cocycle input."""


class FileFormatError(ValueError):
    """An input document is syntactically or structurally invalid."""
