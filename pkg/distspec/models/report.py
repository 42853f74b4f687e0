"""
Response models for verification reports and single-graph results.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class RankedEntry(BaseModel):
    """One isomorphism class in a ranking"""
    graph6: str
    label: Optional[str] = None
    n: int
    m: int
    rho: float
    residual: float


class ClaimResult(BaseModel):
    """Outcome of one checked statement"""
    name: str
    holds: bool
    applicable: bool = True
    detail: str = ""
    graph6: Optional[str] = None


class TieRecord(BaseModel):
    """Two radii closer than the strict-gap threshold, with the exact re-check outcome"""
    graph6_a: str
    graph6_b: str
    rho_a: float
    rho_b: float
    threshold: float
    exact_order: Literal["a<b", "a>b", "undetermined"]


class ExtremalReport(BaseModel):
    """Ranked outcome of a theorem verification or conjecture exploration"""
    theorem: str
    scope: str
    params: Dict[str, int] = Field(default_factory=dict)
    order: Literal["descending", "ascending"] = "descending"
    ranking: List[RankedEntry] = Field(default_factory=list)
    winners: List[str] = Field(default_factory=list)
    tie_set: List[str] = Field(default_factory=list)
    ties: List[TieRecord] = Field(default_factory=list)
    claims: List[ClaimResult] = Field(default_factory=list)
    audit: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    metadata: Dict[str, str] = Field(default_factory=dict)
    wall_time: float = Field(default=0.0, exclude=True)

    @property
    def passed(self) -> bool:
        return all(claim.holds for claim in self.claims if claim.applicable)

    @property
    def winner_unique(self) -> bool:
        return len(self.tie_set) == 1

    def failures(self) -> List[ClaimResult]:
        return [claim for claim in self.claims if claim.applicable and not claim.holds]

    def entry(self, graph6: str) -> Optional[RankedEntry]:
        return next((e for e in self.ranking if e.graph6 == graph6), None)


class RhoReport(BaseModel):
    """Printed result of the rho command"""
    graph6: str
    n: int
    m: int
    rho: float
    residual: float
    lower_bound: float
    upper_bound: float
    transmission_regular: bool
    method: str
