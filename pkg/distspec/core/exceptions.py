"""
Custom exception classes for consistent error handling across the application.
"""
from typing import Any, Dict, Optional


class DistSpecException(Exception):
    """Base exception for distspec"""

    def __init__(self, message: str, exit_code: int = 1, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class ValidationError(DistSpecException):
    """A parameter lies outside its domain; the message names the violated constraint"""

    def __init__(self, constraint: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"constraint violated: {constraint}", exit_code=1, details=details)
        self.constraint = constraint


class ParseError(DistSpecException):
    """Unparseable graph source, family spec or file"""

    def __init__(self, source: str, reason: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"cannot parse {source!r}: {reason}", exit_code=1, details=details)


class DisconnectedGraphError(DistSpecException):
    """Distances and the distance spectral radius are undefined for disconnected graphs"""

    def __init__(self, n: int, components: int):
        super().__init__(
            f"graph on {n} vertices has {components} components; distance matrix undefined",
            exit_code=1,
            details={"n": n, "components": components},
        )


class ConvergenceError(DistSpecException):
    """The eigensolver did not reach the residual contract within its budget"""

    def __init__(self, method: str, iterations: int, residual: float):
        super().__init__(
            f"{method} did not converge after {iterations} iterations (residual {residual:.3e})",
            exit_code=1,
            details={"method": method, "iterations": iterations, "residual": residual},
        )


class RootBracketError(DistSpecException):
    """No sign change of a polynomial was found in the search bracket"""

    def __init__(self, lower: float, upper: float, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"no sign change in [{lower}, {upper}]", exit_code=1, details=details)


class ScopeLimitError(DistSpecException):
    """A request exceeds a desk-scale enumeration or search limit"""

    def __init__(self, limit: str, value: Any, ceiling: Any):
        super().__init__(
            f"scope exceeds limit {limit}: {value} > {ceiling}",
            exit_code=1,
            details={"limit": limit, "value": value, "ceiling": ceiling},
        )


class ClaimViolationError(DistSpecException):
    """A verified claim failed; carries the offending graph in graph6"""

    def __init__(self, claim: str, graph6: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        message = f"claim violated: {claim}"
        if graph6:
            message += f" (graph6 {graph6})"
        super().__init__(message, exit_code=2, details=details)
        self.claim = claim
        self.graph6 = graph6


def format_cli_error(exception: DistSpecException) -> str:
    """Render an exception as the single line printed by the command-line front end"""
    return f"error: {exception.message}"
