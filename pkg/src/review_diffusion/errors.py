"""Exception types shared across the package."""


class DataError(ValueError):
    """Invalid domain data: bad channels, unknown participants, broken invariants."""


class ParseError(DataError):
    """A structured input file could not be parsed; the message names the line."""
