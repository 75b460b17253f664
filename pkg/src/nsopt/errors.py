"""Exception types shared across the toolkit."""


class ContractViolationError(ValueError):
    """An argument violated a documented precondition."""


class NumericalError(ArithmeticError):
    """An oracle or solver produced a non-finite or otherwise invalid result."""


class LineSearchFailure(RuntimeError):
    """Line search exhausted its trial budget without a serious or null step."""


class ConfigError(ValueError):
    """A benchmark configuration document is malformed or names unknown entries."""


class CsvFormatError(ValueError):
    """A trajectory CSV file does not conform to the expected schema."""
