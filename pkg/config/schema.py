"""
Config Schema Validation using Pydantic
Solver, heuristic and hunt settings plus the YAML profile that bundles them
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .search_constants import SearchConstants


class EdgeOrder(str, Enum):
    """Order in which the search visits edges"""
    STATIC = "static"
    DEGREE_SUM = "degree-sum-descending"


class Fallback(str, Enum):
    NONE = "none"
    EXACT = "exact"


class KappaRule(str, Enum):
    """Target color count as a function of the maximum degree"""
    DELTA = "delta"
    DELTA_PLUS_1 = "delta+1"
    DELTA_PLUS_2 = "delta+2"
    DELTA_PLUS_3 = "delta+3"

    @property
    def offset(self) -> int:
        return {"delta": 0, "delta+1": 1, "delta+2": 2, "delta+3": 3}[self.value]

    def kappa_for(self, max_degree: int) -> int:
        return max_degree + self.offset


class GraphClass(str, Enum):
    """Graph classes a hunt can sweep"""
    MAD4 = "mad4"
    SUBCUBIC = "subcubic"
    DELTA4 = "delta4"
    THREE_PLUS_INDEPENDENT = "3plus-indep"
    NO_ADJACENT = "no-adjacent"
    NO_INTERSECT = "no-intersect"
    ALL = "all"


class SolverConfig(BaseModel):
    """Exact search settings"""
    model_config = ConfigDict(frozen=True)

    kappa: int = Field(ge=1, description="Number of colors")
    node_budget: int = Field(default=0, ge=0, description="Max search nodes (0 = unlimited)")
    edge_order: EdgeOrder = Field(default=EdgeOrder.DEGREE_SUM, description="Edge visiting order")
    symmetry_breaking: bool = Field(default=True, description="Quotient color permutations")
    forward_check: bool = Field(default=True, description="Prune on emptied neighbor domains")


class HeuristicConfig(BaseModel):
    """Greedy + repair settings"""
    model_config = ConfigDict(frozen=True)

    kappa: int = Field(ge=1, description="Number of colors")
    seed: int = Field(default=0, ge=0, description="RNG seed")
    restarts: int = Field(default=SearchConstants.DEFAULT_RESTARTS, ge=1, description="Number of passes (first is deterministic)")
    moves_per_stall: int = Field(default=SearchConstants.DEFAULT_MOVES_PER_STALL, ge=0, description="Repair move budget per stall")
    fallback: Fallback = Field(default=Fallback.NONE, description="What to do when every pass fails")
    node_budget: int = Field(default=0, ge=0, description="Node budget of the exact fallback")


class HuntConfig(BaseModel):
    """Counterexample sweep settings"""
    model_config = ConfigDict(frozen=True)

    n_max: int = Field(ge=1, description="Largest vertex count")
    n_min: int = Field(default=1, ge=1, description="Smallest vertex count")
    rule: KappaRule = Field(default=KappaRule.DELTA_PLUS_2, description="kappa as a function of Delta")
    graph_class: GraphClass = Field(default=GraphClass.ALL, description="Class filter")
    node_budget: int = Field(default=0, ge=0, description="Per-kappa node budget (0 = unlimited)")
    jobs: int = Field(default=1, ge=1, le=64, description="Worker processes")
    connected_only: bool = Field(default=True)
    allow_large: bool = Field(default=False, description="Permit n_max above the enumeration cap")

    @field_validator("n_min")
    @classmethod
    def validate_n_min(cls, v, info):
        n_max = info.data.get("n_max")
        if n_max is not None and v > n_max:
            raise ValueError(f"n_min ({v}) must not exceed n_max ({n_max})")
        return v


class SolverSettings(BaseModel):
    """Profile section: solver knobs without kappa"""
    node_budget: int = Field(default=0, ge=0)
    edge_order: EdgeOrder = Field(default=EdgeOrder.DEGREE_SUM)
    symmetry_breaking: bool = Field(default=True)
    forward_check: bool = Field(default=True)

    model_config = ConfigDict(use_enum_values=True)


class HeuristicSettings(BaseModel):
    """Profile section: heuristic knobs without kappa"""
    seed: int = Field(default=0, ge=0)
    restarts: int = Field(default=SearchConstants.DEFAULT_RESTARTS, ge=1, le=10_000)
    moves_per_stall: int = Field(default=SearchConstants.DEFAULT_MOVES_PER_STALL, ge=0, le=10_000)
    fallback: Fallback = Field(default=Fallback.NONE)

    model_config = ConfigDict(use_enum_values=True)


class HuntSettings(BaseModel):
    """Profile section: hunt knobs without the sweep bounds"""
    jobs: int = Field(default=1, ge=1, le=64)
    connected_only: bool = Field(default=True)

    model_config = ConfigDict(use_enum_values=True)


class ProfileSchema(BaseModel):
    """
    Profile Schema v2.0
    Every YAML profile must conform to this schema
    """
    config_version: str = Field(default="2.0", description="Profile version")
    profile_name: str = Field(min_length=3, max_length=100, description="Profile name")
    description: Optional[str] = Field(default=None)

    solver: SolverSettings = Field(default_factory=SolverSettings)
    heuristic: HeuristicSettings = Field(default_factory=HeuristicSettings)
    hunt: HuntSettings = Field(default_factory=HuntSettings)

    @field_validator("profile_name")
    @classmethod
    def validate_profile_name(cls, v):
        if len(v.strip()) < 3:
            raise ValueError("Profile name must be at least 3 characters")
        return v.strip()

    model_config = ConfigDict(use_enum_values=True)

    def solver_config(self, kappa: int, **overrides) -> SolverConfig:
        return SolverConfig(kappa=kappa, **{**self.solver.model_dump(), **overrides})

    def heuristic_config(self, kappa: int, **overrides) -> HeuristicConfig:
        values = {**self.heuristic.model_dump(), "node_budget": self.solver.node_budget}
        return HeuristicConfig(kappa=kappa, **{**values, **overrides})

    def hunt_config(self, n_max: int, **overrides) -> HuntConfig:
        values = {**self.hunt.model_dump(), "node_budget": self.solver.node_budget}
        return HuntConfig(n_max=n_max, **{**values, **overrides})
