"""
Unit tests for MetricService.
"""

import unittest
import sys
import os

import networkx as nx
import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from distspec.core.exceptions import DisconnectedGraphError
from distspec.models.graph import Graph
from distspec.services.corpus_service import CorpusService
from distspec.services.graph_service import GraphService
from distspec.services.metric_service import MetricService
from distspec.utils.graph6 import to_networkx


class TestMetricService(unittest.TestCase):
    """Test cases for distances, transmissions and the spectral bounds."""

    def setUp(self):
        """Set up test fixtures."""
        self.service = MetricService()
        self.graphs = GraphService()

    def test_path_invariants(self):
        """Test transmissions and Wiener index of P_4."""
        d = self.service.distances(self.graphs.path(4))
        self.assertEqual(d.transmissions, (6, 4, 4, 6))
        self.assertEqual(d.wiener, 10)
        self.assertEqual(d.diameter, 3)
        self.assertFalse(self.service.is_transmission_regular(d))

    def test_cycle_is_transmission_regular(self):
        """Test C_5 has every transmission equal to 6."""
        d = self.service.distances(self.graphs.cycle(5))
        self.assertEqual(set(d.transmissions), {6})
        self.assertTrue(self.service.is_transmission_regular(d))

    def test_single_vertex(self):
        """Test the 1x1 zero matrix."""
        d = self.service.distances(Graph.from_edges(1))
        self.assertEqual(d.entries.tolist(), [[0]])
        self.assertEqual(d.wiener, 0)

    def test_disconnected_graph_rejected(self):
        """Test distances are undefined for disconnected graphs."""
        with self.assertRaises(DisconnectedGraphError) as ctx:
            self.service.distances(Graph.from_edges(4, [(0, 1), (2, 3)]))
        self.assertEqual(ctx.exception.details["components"], 2)

    def test_matrix_is_read_only(self):
        """Test the distance matrix cannot be mutated."""
        d = self.service.distances(self.graphs.path(3))
        with self.assertRaises(ValueError):
            d.entries[0, 1] = 5

    def test_against_floyd_warshall(self):
        """Test BFS distances against networkx on a seeded corpus."""
        for g in CorpusService().corpus(40, max_n=12, seed=7):
            expected = nx.floyd_warshall_numpy(to_networkx(g), nodelist=range(g.n))
            np.testing.assert_array_equal(self.service.distances(g).entries, expected.astype(int))

    def test_spectral_bounds(self):
        """Test the bounds for P_4: max(Tr_min, 2W/n) = 5, Tr_max = 6."""
        lower, upper = self.service.spectral_bounds(self.service.distances(self.graphs.path(4)))
        self.assertEqual((lower, upper), (5.0, 6.0))


if __name__ == '__main__':
    unittest.main()
