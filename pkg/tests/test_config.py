"""
Test configuration, logging and the shared utilities.
"""

import unittest
import sys
import os
from unittest.mock import patch

from pydantic import ValidationError as PydanticValidationError

# Add repository root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from distspec.core.config import HARD_LIMITS, RunConfig, Settings, settings as loaded_settings
from distspec.core.exceptions import ValidationError
from distspec.core.performance import ComputePool, MetricsCollector, timed
from distspec.utils.hash import digest, scope_key
from distspec.utils.validators import parse_range, require


def square(x):
    return x * x


class TestSettings(unittest.TestCase):
    """Test settings loaded from the environment."""

    def test_defaults(self):
        """Test the solver contract defaults."""
        settings = Settings(_env_file=None)
        self.assertEqual(settings.residual_tol, 1e-9)
        self.assertEqual(settings.dense_solver_max_n, 64)
        self.assertEqual(settings.max_size_edges, HARD_LIMITS["max_size_edges"])

    def test_environment_override(self):
        """Test DISTSPEC_ variables lower the limits."""
        with patch.dict(os.environ, {"DISTSPEC_MAX_SIZE_EDGES": "8", "DISTSPEC_WORKERS": "3"}):
            settings = Settings(_env_file=None)
        self.assertEqual(settings.max_size_edges, 8)
        self.assertEqual(settings.workers, 3)

    def test_limits_cannot_be_raised(self):
        """Test ceilings above the hard limits are rejected."""
        with patch.dict(os.environ, {"DISTSPEC_MAX_CANONICAL_N": "20"}):
            with self.assertRaises(PydanticValidationError):
                Settings(_env_file=None)


class TestRunConfig(unittest.TestCase):
    """Test per-invocation configuration."""

    def test_rejects_bad_overrides(self):
        """Test nonpositive tolerances and out-of-range limits."""
        with self.assertRaises(PydanticValidationError):
            RunConfig(residual_tol=0)
        with self.assertRaises(PydanticValidationError):
            RunConfig(max_forest_n=13)
        with self.assertRaises(PydanticValidationError):
            RunConfig(workers=0)
        with self.assertRaises(PydanticValidationError):
            RunConfig(root_tol=0)
        with self.assertRaises(PydanticValidationError):
            RunConfig(dense_solver_max_n=0)

    def test_solver_fields_default_to_settings(self):
        """Test the solver knobs start from the loaded settings."""
        config = RunConfig()
        self.assertEqual(config.dense_solver_max_n, loaded_settings.dense_solver_max_n)
        self.assertEqual(config.power_max_iter, loaded_settings.power_max_iter)
        self.assertEqual(config.root_tol, loaded_settings.root_tol)
        self.assertEqual(config.norm_tol, loaded_settings.norm_tol)

    def test_strict_gap(self):
        """Test the floor dominates when residuals vanish."""
        config = RunConfig(gap_floor=1e-6)
        self.assertEqual(config.strict_gap(0.0, 0.0, 0.5), 1e-6)
        self.assertAlmostEqual(config.strict_gap(1e-6, 1e-6, 2.0), 2e-5, places=15)


class TestUtilities(unittest.TestCase):
    """Test validators, hashing and the compute helpers."""

    def test_require(self):
        """Test require names the constraint."""
        require(True, "unused")
        with self.assertRaises(ValidationError) as ctx:
            require(False, "n >= 1", n=0)
        self.assertEqual(ctx.exception.constraint, "n >= 1")
        self.assertEqual(ctx.exception.details, {"n": 0})

    def test_parse_range(self):
        """Test single values and inclusive ranges."""
        self.assertEqual(parse_range("5"), [5])
        self.assertEqual(parse_range("5..9"), [5, 6, 7, 8, 9])
        with self.assertRaises(ValidationError):
            parse_range("9..5")
        with self.assertRaises(ValidationError):
            parse_range("five")

    def test_hashes_are_stable(self):
        """Test keys depend only on the description."""
        self.assertEqual(scope_key("FORESTS(n=5, c=2)"), scope_key("FORESTS(n=5, c=2)"))
        self.assertNotEqual(scope_key("FORESTS(n=5, c=2)"), scope_key("FORESTS(n=5, c=3)"))
        self.assertTrue(scope_key("x").startswith("distspec_"))
        self.assertEqual(len(digest("report")), 64)

    def test_compute_pool_preserves_order(self):
        """Test parallel and in-process maps agree."""
        items = list(range(100))
        self.assertEqual(ComputePool(1).map(square, items), [x * x for x in items])
        self.assertEqual(ComputePool(2, chunksize=8).map(square, items), [x * x for x in items])

    def test_metrics_collector(self):
        """Test counters, durations and the cache hit ratio."""
        collector = MetricsCollector()
        collector.increment("cache_hits", 3)
        collector.increment("cache_misses")
        collector.add_duration(0.5)
        stats = collector.get_stats()
        self.assertEqual(stats["cache_hit_ratio"], 0.75)
        self.assertEqual(stats["max_time"], 0.5)
        collector.reset()
        self.assertEqual(collector.get_stats()["cache_hit_ratio"], 0)

    def test_timed_counts_errors(self):
        """Test the timing decorator records failures."""
        from distspec.core.performance import metrics_collector

        @timed
        def broken():
            raise RuntimeError("boom")

        before = metrics_collector.metrics["errors_total"]
        with self.assertRaises(RuntimeError):
            broken()
        self.assertEqual(metrics_collector.metrics["errors_total"], before + 1)


if __name__ == '__main__':
    unittest.main(verbosity=2)
