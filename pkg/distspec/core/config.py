"""
Configuration settings for the distspec core module.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Hard ceilings of the enumeration machinery; settings and run overrides may only lower them.
HARD_LIMITS = {
    "max_size_edges": 10,
    "max_order_size_n": 10,
    "max_forest_n": 12,
    "max_structured_n": 14,
    "max_canonical_n": 14,
}


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    """
    model_config = SettingsConfigDict(
        env_prefix="DISTSPEC_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Solver contract
    residual_tol: float = 1e-9
    orbit_tol: float = 1e-8
    norm_tol: float = 1e-12
    strict_gap_factor: float = 10.0
    gap_floor: float = 1e-12
    root_tol: float = 1e-10
    dense_solver_max_n: int = 64
    power_max_iter: int = 100_000

    # Enumeration limits
    max_size_edges: int = HARD_LIMITS["max_size_edges"]
    max_order_size_n: int = HARD_LIMITS["max_order_size_n"]
    max_forest_n: int = HARD_LIMITS["max_forest_n"]
    max_structured_n: int = HARD_LIMITS["max_structured_n"]
    max_canonical_n: int = HARD_LIMITS["max_canonical_n"]
    exhaustive_min_n: int = 8

    # Runtime
    workers: int = 1
    output_format: Literal["json", "csv", "text"] = "json"
    cache_dir: Optional[str] = None
    seed: int = 20250101

    # Logging
    log_level: str = "INFO"
    log_json: bool = False

    @model_validator(mode="after")
    def _check_limits(self) -> "Settings":
        for name, ceiling in HARD_LIMITS.items():
            if getattr(self, name) > ceiling:
                raise ValueError(f"{name} may not exceed {ceiling}")
        return self


settings = Settings()


class RunConfig(BaseModel):
    """
    Per-invocation configuration: settings plus command-line overrides.
    """
    residual_tol: float = Field(default_factory=lambda: settings.residual_tol)
    orbit_tol: float = Field(default_factory=lambda: settings.orbit_tol)
    strict_gap_factor: float = Field(default_factory=lambda: settings.strict_gap_factor)
    gap_floor: float = Field(default_factory=lambda: settings.gap_floor)
    norm_tol: float = Field(default_factory=lambda: settings.norm_tol)
    root_tol: float = Field(default_factory=lambda: settings.root_tol)
    dense_solver_max_n: int = Field(default_factory=lambda: settings.dense_solver_max_n, ge=1)
    power_max_iter: int = Field(default_factory=lambda: settings.power_max_iter, ge=1)
    max_size_edges: int = Field(default_factory=lambda: settings.max_size_edges)
    max_order_size_n: int = Field(default_factory=lambda: settings.max_order_size_n)
    max_forest_n: int = Field(default_factory=lambda: settings.max_forest_n)
    max_structured_n: int = Field(default_factory=lambda: settings.max_structured_n)
    max_canonical_n: int = Field(default_factory=lambda: settings.max_canonical_n)
    exhaustive_min_n: int = Field(default_factory=lambda: settings.exhaustive_min_n)
    workers: int = Field(default_factory=lambda: settings.workers, ge=1)
    output_format: Literal["json", "csv", "text"] = Field(
        default_factory=lambda: settings.output_format)
    cache_dir: Optional[str] = Field(default_factory=lambda: settings.cache_dir)
    seed: int = Field(default_factory=lambda: settings.seed)
    overrides: dict[str, str] = Field(default_factory=dict)

    @field_validator("residual_tol", "orbit_tol", "norm_tol", "root_tol", "strict_gap_factor", "gap_floor")
    @classmethod
    def _positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("tolerances must be positive")
        return value

    @model_validator(mode="after")
    def _check_limits(self) -> "RunConfig":
        for name, ceiling in HARD_LIMITS.items():
            value = getattr(self, name)
            if value < 1 or value > ceiling:
                raise ValueError(f"{name} must lie in [1, {ceiling}], got {value}")
        return self

    def strict_gap(self, residual_a: float, residual_b: float, rho: float) -> float:
        """Smallest difference between two radii that counts as a strict inequality."""
        return max(self.strict_gap_factor * (residual_a + residual_b),
                   self.gap_floor * max(1.0, abs(rho)))
