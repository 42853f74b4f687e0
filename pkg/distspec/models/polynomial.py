"""
Closed-form quotient characteristic polynomials of the two forest complements
H = complement(S_{n-c} ∪ K_2 ∪ (c-2)K_1) and H' = complement(D_{n-c+1,1} ∪ (c-1)K_1).
"""
from dataclasses import dataclass
from enum import Enum


class QuotientKind(str, Enum):
    H = "H"
    H_PRIME = "H'"


@dataclass(frozen=True)
class QuotientPolynomial:
    """Exact integer coefficients, highest degree first"""

    kind: QuotientKind
    n: int
    c: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def h(cls, n: int, c: int) -> "QuotientPolynomial":
        return cls(QuotientKind.H, n, c, (
            1,
            -(n - 3),
            -(5 * n - 3 * c - 4),
            c * n - 4 * n - c * c + 2 * c,
            2 * n - 2 * c - 4,
        ))

    @classmethod
    def h_prime(cls, n: int, c: int) -> "QuotientPolynomial":
        return cls(QuotientKind.H_PRIME, n, c, (
            1,
            -(n - 5),
            -(7 * n - 3 * c - 10),
            c * n - 14 * n - c * c + 8 * c + 6,
            2 * c * n - 8 * n - 2 * c * c + 4 * c - 9,
            n - 11,
        ))
