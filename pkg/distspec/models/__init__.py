"""
Value types for distspec.
"""

from distspec.models.graph import Graph, BitGraph, SetGraph
from distspec.models.family import FamilyKind, FamilySpec
from distspec.models.distance import DistanceMatrix
from distspec.models.spectral import SpectralResult
from distspec.models.polynomial import QuotientKind, QuotientPolynomial
from distspec.models.enumeration import CanonicalForm, EnumMode, EnumScope
from distspec.models.report import ClaimResult, ExtremalReport, RankedEntry, RhoReport, TieRecord

__all__ = [
    "Graph", "BitGraph", "SetGraph", "FamilyKind", "FamilySpec", "DistanceMatrix",
    "SpectralResult", "QuotientKind", "QuotientPolynomial", "CanonicalForm", "EnumMode",
    "EnumScope", "ClaimResult", "ExtremalReport", "RankedEntry", "RhoReport", "TieRecord",
]
