"""Exception types shared across the package."""


class RinguaError(Exception):
    """Base class for domain errors raised by ringua."""


class FormatError(RinguaError):
    """A file or value does not match its documented interchange format."""


class AxiomError(RinguaError):
    """A structure failed axiom verification; carries the failure report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BudgetError(RinguaError):
    """An exhaustive operation would exceed the configured size budget."""


class QuotientError(RinguaError):
    """Quotient refused; carries the ill-definedness witness when one exists."""

    def __init__(self, message, classification=None, witness=None):
        super().__init__(message)
        self.classification = classification
        self.witness = witness
