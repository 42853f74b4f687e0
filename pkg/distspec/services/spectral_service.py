"""
Distance spectral radius, Perron vector and the eigenvector identities used by the
extremal arguments.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

import numpy as np
from scipy import linalg

from distspec.core.config import RunConfig
from distspec.core.exceptions import ConvergenceError, ValidationError
from distspec.models.distance import DistanceMatrix
from distspec.models.graph import Graph
from distspec.models.spectral import SpectralResult
from distspec.services.base_service import BaseService
from distspec.services.graph_service import GraphService
from distspec.services.metric_service import MetricService
from distspec.utils.validators import require

Order = Literal["a<b", "a>b", "undetermined"]


@dataclass(frozen=True)
class StrictComparison:
    """Outcome of testing rho_a > rho_b against the strict-gap threshold"""
    rho_a: float
    rho_b: float
    threshold: float

    @property
    def gap(self) -> float:
        return self.rho_a - self.rho_b

    @property
    def holds(self) -> bool:
        return self.gap > self.threshold


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


class SpectralService(BaseService):
    """Largest eigenpair of distance matrices under a certified residual contract"""

    def __init__(self, config: Optional[RunConfig] = None):
        super().__init__(config)
        self.metric = MetricService(self.config)
        self.graphs = GraphService(self.config)

    # -- solver -------------------------------------------------------------------------

    def distance_spectral_radius(self, g: Graph) -> SpectralResult:
        return self.solve(self.metric.distances(g))

    def solve(self, d: DistanceMatrix) -> SpectralResult:
        if d.n == 1:
            perron = np.ones(1)
            perron.setflags(write=False)
            return SpectralResult(rho=0.0, perron=perron, residual=0.0, method="trivial")
        matrix = d.as_float()
        if d.n <= self.config.dense_solver_max_n:
            values, vectors = linalg.eigh(matrix, subset_by_index=[d.n - 1, d.n - 1])
            rho, x, method, iterations = float(values[0]), vectors[:, 0], "eigh", 0
        else:
            rho, x, iterations = self._power_iteration(matrix, d.tr_max)
            method = "power"

        if x.sum() < 0:
            x = -x
        x = x / np.linalg.norm(x)
        residual = float(np.max(np.abs(matrix @ x - rho * x)))
        if residual > self.config.residual_tol * max(1.0, rho) or x.min() <= 0:
            raise ConvergenceError(method, iterations, residual)
        x.setflags(write=False)
        return SpectralResult(rho=rho, perron=x, residual=residual, method=method, iterations=iterations)

    def _power_iteration(self, matrix: np.ndarray, shift: float) -> tuple[float, np.ndarray, int]:
        """Power iteration on D + shift·I from the uniform vector; shift = Tr_max keeps rho dominant."""
        n = matrix.shape[0]
        x = np.full(n, 1.0 / np.sqrt(n))
        residual = np.inf
        for iteration in range(1, self.config.power_max_iter + 1):
            dx = matrix @ x
            rho = float(x @ dx)
            residual = float(np.max(np.abs(dx - rho * x)))
            if residual <= 0.1 * self.config.residual_tol * max(1.0, rho):
                return rho, x, iteration
            y = dx + shift * x
            x = y / np.linalg.norm(y)
        raise ConvergenceError("power", self.config.power_max_iter, residual)

    # -- eigenvector identities -------------------------------------------------------------

    def rayleigh(self, d: DistanceMatrix, x: Sequence[float]) -> float:
        """x^T D x = sum over pairs of 2 d(u,v) x_u x_v for a unit x with a nonnegative entry."""
        x = np.asarray(x, dtype=np.float64)
        require(x.shape == (d.n,), f"x has length {d.n}")
        if abs(np.linalg.norm(x) - 1.0) > self.config.norm_tol:
            raise ValidationError("x is a unit vector", details={"norm": float(np.linalg.norm(x))})
        require(bool((x >= 0).any()), "x has at least one nonnegative entry")
        return float(x @ d.as_float() @ x)

    @staticmethod
    def eigenequation_residual(d: DistanceMatrix, rho: float, x: Sequence[float], u: int) -> float:
        """rho·x_u - sum_v d(u,v) x_v; zero at the true Perron pair."""
        x = np.asarray(x, dtype=np.float64)
        return float(rho * x[u] - d.row(u) @ x)

    def perron_orbit_check(self, g: Graph, result: SpectralResult,
                           orbits: Iterable[Iterable[int]]) -> bool:
        """True iff the Perron entries are constant on every orbit."""
        orbits = [tuple(o) for o in orbits]
        covered = sorted(v for orbit in orbits for v in orbit)
        require(covered == list(range(g.n)), "orbits partition the vertex set")
        for orbit in orbits:
            values = result.perron[list(orbit)]
            if values.max() - values.min() > self.config.orbit_tol:
                return False
        return True

    def quotient_spectral_radius(self, g: Graph, partition: Sequence[Sequence[int]]) -> float:
        """Largest eigenvalue of the distance quotient matrix of an equitable partition."""
        d = self.metric.distances(g)
        cells = [list(cell) for cell in partition]
        require(sorted(v for cell in cells for v in cell) == list(range(g.n)),
                "partition covers every vertex exactly once")
        quotient = np.zeros((len(cells), len(cells)))
        for i, cell in enumerate(cells):
            for j, other in enumerate(cells):
                sums = {int(d.entries[u][other].sum()) for u in cell}
                require(len(sums) == 1, "partition is equitable for the distance matrix", cell=i, other=j)
                quotient[i, j] = sums.pop()
        return float(max(np.linalg.eigvals(quotient).real))

    # -- comparisons ----------------------------------------------------------------------------

    def compare(self, a: SpectralResult, b: SpectralResult) -> StrictComparison:
        return StrictComparison(a.rho, b.rho,
                                self.config.strict_gap(a.residual, b.residual, max(a.rho, b.rho)))

    @staticmethod
    def second_largest_eigenvalue(d: DistanceMatrix) -> float:
        if d.n < 2:
            return float("-inf")
        values = linalg.eigh(d.as_float(), eigvals_only=True, subset_by_index=[d.n - 2, d.n - 2])
        return float(values[0])

    def _side_of(self, d: DistanceMatrix, q: Fraction) -> Optional[int]:
        """Sign of rho - q decided by the exact sign of det(qI - D); None when not decidable."""
        if self.second_largest_eigenvalue(d) >= float(q) - 1e-9:
            return None
        a, b = q.numerator, q.denominator
        matrix = [[(a if i == j else 0) - b * int(d.entries[i][j]) for j in range(d.n)] for i in range(d.n)]
        det = bareiss_determinant(matrix)
        if det == 0:
            return 0
        return 1 if det < 0 else -1

    def certify_strict_order(self, a: Graph, b: Graph) -> Order:
        """Exact order of rho(a) and rho(b) via characteristic-polynomial signs at a rational point."""
        ra, rb = self.distance_spectral_radius(a), self.distance_spectral_radius(b)
        if ra.rho == rb.rho:
            return "undetermined"
        q = Fraction((ra.rho + rb.rho) / 2)
        side_a = self._side_of(self.metric.distances(a), q)
        side_b = self._side_of(self.metric.distances(b), q)
        if side_a == -1 and side_b == 1:
            return "a<b"
        if side_a == 1 and side_b == -1:
            return "a>b"
        return "undetermined"

    # -- lemma checks ------------------------------------------------------------------------------

    def check_monotonicity(self, g: Graph, u: int, v: int) -> StrictComparison:
        """rho(g) > rho(g + uv) for a non-edge uv."""
        return self.compare(self.distance_spectral_radius(g),
                            self.distance_spectral_radius(self.graphs.add_edge(g, u, v)))

    def check_bounds(self, g: Graph) -> dict:
        """Sandwich by transmissions and Wiener index, with the equality characterisation."""
        d = self.metric.distances(g)
        result = self.solve(d)
        lower, upper = self.metric.spectral_bounds(d)
        slack = self.config.residual_tol * max(1.0, result.rho)
        regular = self.metric.is_transmission_regular(d)
        tight = abs(result.rho - lower) <= self.config.orbit_tol or abs(result.rho - upper) <= self.config.orbit_tol
        return {
            "rho": result.rho,
            "lower": lower,
            "upper": upper,
            "sandwiched": lower - slack <= result.rho <= upper + slack,
            "transmission_regular": regular,
            "equality_iff_regular": tight == regular,
        }

    def check_shift_lemma(self, g: Graph, u: int, v: int, shifted: Iterable[int]) -> Optional[StrictComparison]:
        """rho(g') > rho(g) for the neighbour shift from u to v when x_u >= x_v and both diameters are 2.

        Returns None when the hypotheses do not hold for this instance.
        """
        shifted = list(shifted)
        moved = self.graphs.shift_neighbors(g, u, v, shifted)
        if not (self.graphs.is_connected(g) and self.graphs.is_connected(moved)):
            return None
        if self.metric.distances(g).diameter != 2 or self.metric.distances(moved).diameter != 2:
            return None
        before = self.distance_spectral_radius(g)
        if before.perron[u] < before.perron[v]:
            return None
        return self.compare(self.distance_spectral_radius(moved), before)
