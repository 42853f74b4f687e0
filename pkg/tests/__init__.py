"""
Test package for distspec.
Unit tests per service plus command-line and seeded property suites.
"""

# Test modules
__all__ = [
    'test_graph_service',
    'test_metric_service',
    'test_spectral_service',
    'test_charpoly_service',
    'test_enumeration_service',
    'test_extremal_service',
    'test_properties',
    'test_cli',
    'test_config'
]

# Version info
__version__ = "1.0.0"
__description__ = "Test suite for the distance spectral radius toolkit"
