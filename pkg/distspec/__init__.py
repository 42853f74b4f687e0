"""
distspec: distance spectral radius library and verification tool.
"""

__version__ = "1.0.0"
