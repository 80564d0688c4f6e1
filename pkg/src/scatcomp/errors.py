"""Exception types shared across the package."""


class ScatcompError(Exception):
    """Base class for all library errors."""


class WordSyntaxError(ScatcompError):
    """Raised when text cannot be mapped to a word (unknown letter, bad file line)."""


class LengthMismatch(ScatcompError):
    """Raised when inputs violate a length precondition, e.g. |u| != |v|."""


class NotAScatteredFactor(ScatcompError):
    """Raised when u is required to be a scattered factor of w but is not."""


class BudgetExceeded(ScatcompError):
    """Raised when an enumeration or table grows past its configured cap."""


# Default cap on enumerated/stored items for operations that can blow up.
DEFAULT_BUDGET = 10**6
