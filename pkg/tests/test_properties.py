"""
Seeded property tests over random corpora.
"""

import unittest
import sys
import os

import networkx as nx
import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from distspec.services.corpus_service import CorpusService
from distspec.services.enumeration_service import EnumerationService
from distspec.services.graph_service import GraphService
from distspec.services.spectral_service import SpectralService
from distspec.utils.graph6 import from_graph6, to_graph6, to_networkx

SEED = 20250101


class TestCorpusProperties(unittest.TestCase):
    """Properties every connected graph in the corpus must satisfy."""

    def setUp(self):
        """Set up test fixtures."""
        self.corpus_service = CorpusService()
        self.spectral = SpectralService()
        self.graphs = GraphService()
        self.corpus = self.corpus_service.corpus(200, max_n=12, seed=SEED)

    def test_corpus_is_connected_and_seeded(self):
        """Test the corpus is reproducible and connected."""
        again = self.corpus_service.corpus(200, max_n=12, seed=SEED)
        self.assertEqual(self.corpus, again)
        for g in self.corpus:
            self.assertTrue(nx.is_connected(to_networkx(g)))

    def test_graph6_round_trip(self):
        """Test graph6 encoding is lossless on the corpus."""
        for g in self.corpus:
            self.assertEqual(from_graph6(to_graph6(g)), g)

    def test_sandwich(self):
        """Test max(Tr_min, 2W/n) <= rho <= Tr_max with equality iff transmission regular."""
        for g in self.corpus:
            report = self.spectral.check_bounds(g)
            self.assertTrue(report["sandwiched"], msg=to_graph6(g))
            self.assertTrue(report["equality_iff_regular"], msg=to_graph6(g))

    def test_edge_monotonicity(self):
        """Test adding any non-edge strictly lowers rho."""
        for g, u, v in self.corpus_service.non_edge_pairs(100, max_n=12, seed=SEED):
            self.assertTrue(self.spectral.check_monotonicity(g, u, v).holds, msg=to_graph6(g))

    def test_perron_constant_on_orbits(self):
        """Test Perron entries agree on automorphism orbits."""
        enumeration = EnumerationService()
        for g in self.corpus_service.symmetric_corpus(max_n=9):
            result = self.spectral.distance_spectral_radius(g)
            self.assertTrue(self.spectral.perron_orbit_check(g, result, enumeration.orbits(g)), msg=to_graph6(g))

    def test_rho_matches_numpy(self):
        """Test the solver against a plain dense eigendecomposition."""
        for g in self.corpus[:50]:
            d = self.spectral.metric.distances(g)
            expected = float(np.linalg.eigvalsh(d.as_float())[-1])
            self.assertAlmostEqual(self.spectral.solve(d).rho, expected, delta=1e-9 * max(1.0, expected))

    def test_forest_complements_have_diameter_two(self):
        """Test complements of forests with two or more trees have diameter at most 2."""
        for g in self.corpus_service.forest_complements(50, seed=SEED):
            self.assertTrue(self.graphs.structure_queries(g).diameter_le_2, msg=to_graph6(g))


if __name__ == '__main__':
    unittest.main()
