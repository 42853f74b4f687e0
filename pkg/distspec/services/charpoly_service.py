"""
Quotient characteristic polynomials of the two extremal forest complements and
their root extraction, cross-checked against the eigensolver.
"""
from typing import Optional, Sequence

from scipy.optimize import brentq

from distspec.core.config import RunConfig
from distspec.core.exceptions import RootBracketError
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.graph import Graph
from distspec.models.polynomial import QuotientKind, QuotientPolynomial
from distspec.services.base_service import BaseService
from distspec.services.graph_service import GraphService
from distspec.services.metric_service import MetricService
from distspec.utils.validators import require


def _correction(n: int, c: int) -> tuple[int, ...]:
    """2t^2 + (2n-2c+5)t + 3n-4c+3, highest degree first."""
    return (2, 2 * n - 2 * c + 5, 3 * n - 4 * c + 3)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    width = max(len(a), len(b))
    a = [0] * (width - len(a)) + list(a)
    b = [0] * (width - len(b)) + list(b)
    return [x - y for x, y in zip(a, b)]


class CharpolyService(BaseService):
    """Evaluation, factorization identity and largest roots of P_H and P_H'"""

    MAX_DOUBLINGS = 8

    def __init__(self, config: Optional[RunConfig] = None):
        super().__init__(config)
        self.graphs = GraphService(self.config)
        self.metric = MetricService(self.config)

    @staticmethod
    def polynomial(kind: QuotientKind, n: int, c: int) -> QuotientPolynomial:
        if kind is QuotientKind.H:
            return QuotientPolynomial.h(n, c)
        return QuotientPolynomial.h_prime(n, c)

    @staticmethod
    def eval(p: QuotientPolynomial, t: float) -> float:
        value = 0.0
        for coefficient in p.coefficients:
            value = value * t + coefficient
        return value

    def coefficient_defect(self, n: int, c: int) -> list[int]:
        """Coefficients of P_H' - [P_H·(t+2) - correction]; all zero when the identity holds."""
        expanded = poly_sub(poly_mul(QuotientPolynomial.h(n, c).coefficients, (1, 2)), _correction(n, c))
        return poly_sub(QuotientPolynomial.h_prime(n, c).coefficients, expanded)

    def factorization_defect(self, n: int, c: int, t: float) -> float:
        h = QuotientPolynomial.h(n, c)
        h_prime = QuotientPolynomial.h_prime(n, c)
        a, b, k = _correction(n, c)
        return self.eval(h_prime, t) - (self.eval(h, t) * (t + 2) - (a * t * t + b * t + k))

    # -- the two graphs -------------------------------------------------------------------

    @staticmethod
    def h_spec(n: int, c: int) -> FamilySpec:
        """complement(S_{n-c} ∪ K_2 ∪ (c-2)K_1)"""
        parts = [FamilySpec.of(FamilyKind.STAR, n - c), FamilySpec.of(FamilyKind.COMPLETE, 2)]
        parts += [FamilySpec.of(FamilyKind.COMPLETE, 1)] * (c - 2)
        return FamilySpec.complement(FamilySpec.union(*parts))

    @staticmethod
    def h_prime_spec(n: int, c: int) -> FamilySpec:
        """complement(D_{n-c+1,1} ∪ (c-1)K_1)"""
        parts = [FamilySpec.of(FamilyKind.DOUBLE_STAR, n - c + 1, 1)]
        parts += [FamilySpec.of(FamilyKind.COMPLETE, 1)] * (c - 1)
        return FamilySpec.complement(FamilySpec.union(*parts))

    def _require_regime(self, n: int, c: int) -> None:
        require(2 <= c <= n - 3, "2 <= c <= n - 3", n=n, c=c)

    def h_graph(self, n: int, c: int) -> Graph:
        self._require_regime(n, c)
        return self.graphs.construct(self.h_spec(n, c))

    def h_prime_graph(self, n: int, c: int) -> Graph:
        self._require_regime(n, c)
        return self.graphs.construct(self.h_prime_spec(n, c))

    def target_graph(self, p: QuotientPolynomial) -> Graph:
        if p.kind is QuotientKind.H:
            return self.h_graph(p.n, p.c)
        return self.h_prime_graph(p.n, p.c)

    # -- roots ----------------------------------------------------------------------------

    def largest_root(self, p: QuotientPolynomial) -> float:
        """Largest real root, bracketed in [n - 1, Tr_max + 1] with upper-end doubling.

        Every other eigenvalue of a diameter-2 distance matrix is at most n - 3.
        """
        self._require_regime(p.n, p.c)
        lower = float(p.n - 1)
        upper = float(self.metric.distances(self.target_graph(p)).tr_max + 1)
        f_lower = self.eval(p, lower)
        for _ in range(self.MAX_DOUBLINGS + 1):
            if f_lower * self.eval(p, upper) < 0:
                root = brentq(lambda t: self.eval(p, t), lower, upper, xtol=self.config.root_tol)
                self._log_operation("largest_root", kind=p.kind.value, n=p.n, c=p.c, root=root)
                return float(root)
            upper *= 2
        raise RootBracketError(lower, upper, details={"kind": p.kind.value, "n": p.n, "c": p.c})

    def key_inequality(self, n: int, c: int) -> float:
        """P_H'(rho(H)); negative whenever rho(H') > rho(H)."""
        root = self.largest_root(QuotientPolynomial.h(n, c))
        return self.eval(QuotientPolynomial.h_prime(n, c), root)
