"""
Unit tests for SpectralService.
Solver contract, eigenvector identities and exact order certification.
"""

import unittest
import sys
import os

import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from distspec.core.config import RunConfig
from distspec.core.exceptions import ConvergenceError, DisconnectedGraphError, ValidationError
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.graph import Graph
from distspec.services.graph_service import GraphService
from distspec.services.spectral_service import SpectralService, StrictComparison, bareiss_determinant

TOL = 5e-4


def complement_of(*parts):
    return FamilySpec.complement(FamilySpec.union(*parts))


class TestSolver(unittest.TestCase):
    """Test cases for the distance spectral radius solver."""

    def setUp(self):
        """Set up test fixtures."""
        self.service = SpectralService()
        self.graphs = GraphService()

    def test_complete_graphs(self):
        """Test rho(K_n) = n - 1 with a uniform Perron vector."""
        for n in range(2, 9):
            result = self.service.distance_spectral_radius(self.graphs.complete(n))
            self.assertAlmostEqual(result.rho, n - 1, delta=1e-9)
            np.testing.assert_allclose(result.perron, np.full(n, 1 / np.sqrt(n)), atol=1e-9)

    def test_single_vertex(self):
        """Test the trivial graph has radius zero and a read-only vector."""
        result = self.service.distance_spectral_radius(Graph.from_edges(1))
        self.assertEqual(result.rho, 0.0)
        self.assertEqual(result.perron.tolist(), [1.0])
        with self.assertRaises(ValueError):
            result.perron[0] = 2.0

    def test_cycles(self):
        """Test rho(C_n) = floor(n^2 / 4)."""
        for n in range(3, 12):
            result = self.service.distance_spectral_radius(self.graphs.cycle(n))
            self.assertAlmostEqual(result.rho, n * n // 4, delta=1e-9)

    def test_perron_vector_contract(self):
        """Test the Perron vector is positive, unit and satisfies the residual bound."""
        g = self.graphs.construct(FamilySpec.of(FamilyKind.DOUBLE_STAR, 9, 3))
        result = self.service.distance_spectral_radius(g)
        self.assertGreater(result.perron.min(), 0)
        self.assertAlmostEqual(float(np.linalg.norm(result.perron)), 1.0, delta=1e-12)
        self.assertLessEqual(result.residual, 1e-9 * max(1.0, result.rho))
        self.assertEqual(result.method, "eigh")

    def test_known_values(self):
        """Test published radii of small complements of linear forests."""
        cases = [
            (self.graphs.pnc(9, 2), 9.5782),
            (self.graphs.pnc(7, 2), 7.4553),
            (self.graphs.construct(complement_of(FamilySpec.of(FamilyKind.CYCLE, 3),
                                                 FamilySpec.of(FamilyKind.PATH, 2),
                                                 FamilySpec.of(FamilyKind.PATH, 2))), 7.4641),
        ]
        for g, expected in cases:
            self.assertAlmostEqual(self.service.distance_spectral_radius(g).rho, expected, delta=TOL)

    def test_power_iteration_matches_dense_solver(self):
        """Test the iterative path above the dense threshold against numpy."""
        g = self.graphs.path(80)
        result = self.service.distance_spectral_radius(g)
        self.assertEqual(result.method, "power")
        expected = float(np.linalg.eigvalsh(self.service.metric.distances(g).as_float())[-1])
        self.assertAlmostEqual(result.rho, expected, delta=1e-8 * expected)
        self.assertGreater(result.perron.min(), 0)

    def test_regular_graph_on_power_path(self):
        """Test a transmission-regular graph converges at once from the uniform start."""
        result = self.service.distance_spectral_radius(self.graphs.cycle(70))
        self.assertAlmostEqual(result.rho, 1225.0, delta=1e-6)

    def test_run_config_reaches_solver(self):
        """Test dense_solver_max_n and power_max_iter come from the run configuration."""
        g = self.graphs.path(6)
        result = SpectralService(RunConfig(dense_solver_max_n=4)).distance_spectral_radius(g)
        self.assertEqual(result.method, "power")
        self.assertAlmostEqual(result.rho, self.service.distance_spectral_radius(g).rho, delta=1e-8)
        with self.assertRaises(ConvergenceError):
            SpectralService(RunConfig(dense_solver_max_n=4, power_max_iter=1)).distance_spectral_radius(
                self.graphs.path(10))

    def test_disconnected(self):
        """Test the solver refuses disconnected graphs."""
        with self.assertRaises(DisconnectedGraphError):
            self.service.distance_spectral_radius(Graph.from_edges(4, [(0, 1), (2, 3)]))


class TestEigenvectorIdentities(unittest.TestCase):
    """Test the Rayleigh quotient, eigenequation and orbit checks."""

    def setUp(self):
        self.service = SpectralService()
        self.graphs = GraphService()

    def test_rayleigh_uniform_on_complete(self):
        """Test the uniform vector attains n - 1 on K_n."""
        d = self.service.metric.distances(self.graphs.complete(5))
        self.assertAlmostEqual(self.service.rayleigh(d, np.full(5, 1 / np.sqrt(5))), 4.0, delta=1e-12)

    def test_rayleigh_at_perron_vector(self):
        """Test the quotient at the Perron vector equals rho."""
        g = self.graphs.pnc(8, 3)
        d = self.service.metric.distances(g)
        result = self.service.solve(d)
        self.assertAlmostEqual(self.service.rayleigh(d, result.perron), result.rho, delta=1e-9)

    def test_rayleigh_rejects_non_unit(self):
        """Test non-unit vectors are rejected."""
        d = self.service.metric.distances(self.graphs.path(3))
        with self.assertRaises(ValidationError):
            self.service.rayleigh(d, [1.0, 1.0, 1.0])

    def test_rayleigh_norm_tolerance(self):
        """Test the unit-norm check uses norm_tol from the run configuration."""
        d = self.service.metric.distances(self.graphs.complete(4))
        x = np.full(4, 0.5) * (1 + 1e-9)
        with self.assertRaises(ValidationError):
            self.service.rayleigh(d, x)
        loose = SpectralService(RunConfig(norm_tol=1e-6))
        self.assertAlmostEqual(loose.rayleigh(d, x), 3.0, delta=1e-6)

    def test_eigenequation_residual(self):
        """Test the residual vanishes at the Perron pair and not elsewhere."""
        d = self.service.metric.distances(self.graphs.path(3))
        result = self.service.solve(d)
        for u in range(3):
            self.assertAlmostEqual(
                SpectralService.eigenequation_residual(d, result.rho, result.perron, u), 0.0, delta=1e-9)
        uniform = np.full(3, 1 / np.sqrt(3))
        off = SpectralService.eigenequation_residual(d, 8 / 3, uniform, 1)
        self.assertAlmostEqual(off, (8 / 3 - 2) / np.sqrt(3), delta=1e-12)

    def test_perron_orbit_check(self):
        """Test leaves of a star carry equal Perron entries."""
        star = self.graphs.star(5)
        result = self.service.distance_spectral_radius(star)
        self.assertTrue(self.service.perron_orbit_check(star, result, [(0,), (1, 2, 3, 4)]))
        path = self.graphs.path(4)
        self.assertFalse(self.service.perron_orbit_check(
            path, self.service.distance_spectral_radius(path), [(0, 1, 2, 3)]))

    def test_quotient_matches_rho(self):
        """Test the star quotient [[0,4],[1,6]] gives 3 + sqrt(13)."""
        star = self.graphs.star(5)
        quotient = self.service.quotient_spectral_radius(star, [(0,), (1, 2, 3, 4)])
        self.assertAlmostEqual(quotient, 3 + np.sqrt(13), delta=1e-9)
        self.assertAlmostEqual(quotient, self.service.distance_spectral_radius(star).rho, delta=1e-9)

    def test_quotient_rejects_non_equitable(self):
        """Test a partition that is not equitable is rejected."""
        with self.assertRaises(ValidationError):
            self.service.quotient_spectral_radius(self.graphs.path(4), [(0, 1), (2, 3)])


class TestComparisons(unittest.TestCase):
    """Test strict comparisons and exact certification."""

    def setUp(self):
        self.service = SpectralService()
        self.graphs = GraphService()

    def test_strict_comparison(self):
        """Test the gap must exceed the threshold."""
        self.assertTrue(StrictComparison(5.0, 4.0, 1e-9).holds)
        self.assertFalse(StrictComparison(5.0, 5.0 - 1e-12, 1e-9).holds)

    def test_strict_gap_threshold(self):
        """Test the threshold is the larger of the residual and floor terms."""
        config = RunConfig()
        self.assertAlmostEqual(config.strict_gap(1e-10, 1e-10, 5.0), 2e-9)
        self.assertAlmostEqual(config.strict_gap(0.0, 0.0, 100.0), 1e-10)

    def test_bareiss_determinant(self):
        """Test exact determinants including a row swap."""
        self.assertEqual(bareiss_determinant([[2, 1], [1, 2]]), 3)
        self.assertEqual(bareiss_determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(bareiss_determinant([[1, 2], [2, 4]]), 0)
        matrix = [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
        self.assertEqual(bareiss_determinant(matrix), round(np.linalg.det(np.array(matrix))))

    def test_certify_strict_order(self):
        """Test rho(P_4) > rho(C_4) is certified exactly."""
        p4, c4 = self.graphs.path(4), self.graphs.cycle(4)
        self.assertEqual(self.service.certify_strict_order(p4, c4), "a>b")
        self.assertEqual(self.service.certify_strict_order(c4, p4), "a<b")
        self.assertEqual(self.service.certify_strict_order(p4, self.graphs.path(4)), "undetermined")

    def test_monotonicity(self):
        """Test adding an edge strictly lowers the radius."""
        self.assertTrue(self.service.check_monotonicity(self.graphs.path(4), 0, 3).holds)

    def test_bounds(self):
        """Test the sandwich and its equality case."""
        report = self.service.check_bounds(self.graphs.path(4))
        self.assertTrue(report["sandwiched"])
        self.assertFalse(report["transmission_regular"])
        self.assertTrue(report["equality_iff_regular"])

        report = self.service.check_bounds(self.graphs.cycle(6))
        self.assertTrue(report["transmission_regular"])
        self.assertAlmostEqual(report["rho"], report["upper"], delta=1e-9)
        self.assertTrue(report["equality_iff_regular"])

    def test_shift_lemma(self):
        """Test the neighbour shift on complement(P_5 ∪ K_1) raises the radius."""
        g = self.graphs.construct(complement_of(FamilySpec.of(FamilyKind.PATH, 5),
                                                FamilySpec.of(FamilyKind.PATH, 1)))
        outcomes = [self.service.check_shift_lemma(g, 1, 2, [3]),
                    self.service.check_shift_lemma(g, 2, 1, [0])]
        applicable = [outcome for outcome in outcomes if outcome is not None]
        self.assertTrue(applicable)
        for outcome in applicable:
            self.assertTrue(outcome.holds)

    def test_shift_lemma_not_applicable(self):
        """Test instances leaving diameter 2 are reported as not applicable."""
        self.assertIsNone(self.service.check_shift_lemma(self.graphs.path(4), 1, 3, [0]))


if __name__ == '__main__':
    unittest.main()
