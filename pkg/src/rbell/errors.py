"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside an operation's documented domain."""


class InconsistencyError(ArithmeticError):
    """An identity that must hold exactly failed; signals a defect, not bad input."""


class ConvergenceError(RuntimeError):
    """An iterative approximation hit its hard resource cap before reaching tolerance."""
