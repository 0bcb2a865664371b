"""Exception hierarchy shared by every module.

Each error carries a short stable ``name`` that the command line reports
verbatim, so scripts can match on it.
"""


class SuperJordanError(Exception):
    name = "error"


class ShapeError(SuperJordanError, ValueError):
    name = "shape mismatch"


class NonsplitSpectrum(SuperJordanError):
    """A characteristic polynomial has an irreducible factor of degree > 1 over Q."""

    name = "nonsplit spectrum"

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class RelationViolated(SuperJordanError):
    name = "relation violated"


class DimensionUnsupported(SuperJordanError):
    name = "dimension unsupported"


class ConstraintViolation(SuperJordanError, ValueError):
    name = "constraint violation"


class ClosureViolated(SuperJordanError):
    name = "closure violated"


class ParseError(SuperJordanError, ValueError):
    name = "parse error"

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
