"""Semantic exception hierarchy. Public functions never raise bare ValueError."""


class RisksetError(Exception):
    """Base error for the package."""


class ValidationError(RisksetError, ValueError):
    """Inputs violate a contract: domain, shape, or malformed data."""


class DimensionMismatch(ValidationError):
    """Operands live on different spaces or have different dimensions."""


class SpecParseError(ValidationError):
    """A functional/set specification string could not be parsed."""


class UnboundedError(RisksetError):
    """A requested optimum is -inf/+inf; carries the offending direction."""


class BudgetExceeded(RisksetError):
    """A brute-force enumeration would exceed the configured evaluation budget."""
