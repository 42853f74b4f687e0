"""
Canonical forms and enumeration scopes.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant code: equal iff the graphs are isomorphic.

    ``code`` packs the relabelled upper triangle in graph6 column order, first
    pair most significant. ``labeling[i]`` is the original vertex placed at
    canonical position i. ``orbits`` is the automorphism orbit partition.
    """

    n: int
    code: int
    orbits: tuple[tuple[int, ...], ...] = ()
    labeling: tuple[int, ...] = ()

    @property
    def key(self) -> tuple[int, int]:
        return (self.n, self.code)

    def same_class(self, other: "CanonicalForm") -> bool:
        return self.key == other.key

    @property
    def has_nontrivial_automorphism(self) -> bool:
        return any(len(orbit) > 1 for orbit in self.orbits)


class EnumMode(str, Enum):
    BY_SIZE = "by_size"
    BY_ORDER_SIZE = "by_order_size"
    FORESTS = "forests"
    STRUCTURED_MIN = "structured_min"


@dataclass(frozen=True)
class EnumScope:
    """Which isomorphism classes an enumeration stream covers"""

    mode: EnumMode
    m: Optional[int] = None
    n: Optional[int] = None
    c: Optional[int] = None
    s: Optional[int] = None
    max_n: Optional[int] = None
    include_all_forests: bool = False

    @classmethod
    def by_size(cls, m: int, max_n: Optional[int] = None) -> "EnumScope":
        return cls(EnumMode.BY_SIZE, m=m, max_n=max_n)

    @classmethod
    def by_order_size(cls, n: int, m: int) -> "EnumScope":
        return cls(EnumMode.BY_ORDER_SIZE, n=n, m=m)

    @classmethod
    def forests(cls, n: int, c: int) -> "EnumScope":
        return cls(EnumMode.FORESTS, n=n, c=c)

    @classmethod
    def structured_min(cls, n: int, s: int, include_all_forests: bool = False) -> "EnumScope":
        return cls(EnumMode.STRUCTURED_MIN, n=n, s=s, include_all_forests=include_all_forests)

    def describe(self) -> str:
        if self.mode is EnumMode.BY_SIZE:
            suffix = f", max_n={self.max_n}" if self.max_n is not None else ""
            return f"BY_SIZE(m={self.m}{suffix})"
        if self.mode is EnumMode.BY_ORDER_SIZE:
            return f"BY_ORDER_SIZE(n={self.n}, m={self.m})"
        if self.mode is EnumMode.FORESTS:
            return f"FORESTS(n={self.n}, c={self.c})"
        extra = ", all forests" if self.include_all_forests else ""
        return f"STRUCTURED_MIN(n={self.n}, s={self.s}{extra})"
