"""Exception types raised across the package."""


class TableError(ValueError):
    """Base class for invalid-table conditions."""


class NonPositiveEntry(TableError):
    """A table contains a zero, negative or non-finite entry."""


class DimMismatch(TableError):
    """Two tables that must share a shape do not."""


class NotSquare(TableError):
    """A transpose-based operation received a rectangular table."""


class LambdaOutOfRange(ValueError):
    pass


class InvalidParams(ValueError):
    pass


class UnknownKind(ValueError):
    pass


class MalformedCsv(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class ZeroCellRejected(ValueError):
    pass
