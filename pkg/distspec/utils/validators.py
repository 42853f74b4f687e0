# distspec/utils/validators.py
# Domain checks shared by constructors, services and the command line.

import re
from typing import Iterable

from distspec.core.exceptions import ValidationError

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


def require(condition: bool, constraint: str, **details) -> None:
    """
    Raise ValidationError naming the constraint when the condition fails.

    Args:
        condition (bool): Result of the domain check.
        constraint (str): Human-readable statement of the violated constraint.
    """
    if not condition:
        raise ValidationError(constraint, details=details or None)


def validate_vertex(n: int, *vertices: int) -> None:
    for v in vertices:
        require(0 <= v < n, f"0 <= vertex < {n}", vertex=v)


def validate_edges(n: int, edges: Iterable[tuple[int, int]]) -> None:
    for u, v in edges:
        validate_vertex(n, u, v)
        require(u != v, "no loops", edge=[u, v])


def parse_range(text: str) -> list[int]:
    """
    Parse "5" or "5..9" into an inclusive list of integers.

    Args:
        text (str): Range expression.

    Returns:
        list[int]: The integers in the range.
    """
    match = _RANGE.match(text)
    require(match is not None, "range has the form a or a..b", text=text)
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    require(low <= high, "range lower end <= upper end", text=text)
    return list(range(low, high + 1))
