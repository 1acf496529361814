"""Exception types raised by the numerical routines."""


class PolyintError(Exception):
    """Base class for all package errors."""


class DomainError(PolyintError, ValueError):
    """Argument outside the domain where the function is defined here."""


class PoleError(DomainError):
    """Argument sits on a pole (nonpositive integer for psi and friends)."""


class DivergenceError(DomainError):
    """The requested series or integral does not converge."""


class NonConvergenceError(PolyintError, ArithmeticError):
    """A numerical procedure hit its work cap before reaching the tolerance."""
