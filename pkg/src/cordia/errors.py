"""Exception types shared across the toolkit."""


class BudgetError(RuntimeError):
    """A request exceeds the exhaustive-search budget this toolkit is sized for."""


class GraphFormatError(ValueError):
    """Malformed graph6 text."""


class UnknownTagError(ValueError):
    """Unrecognized named-graph tag."""
