"""
Errors raised when inputs leave their physical or operational domain
"""


class PhysicalDomainError(ValueError):
    """Exception raised when a quantity lies outside its physical domain"""


class PreconditionError(ValueError):
    """Exception raised when the inputs of an operation do not satisfy its
    preconditions"""
