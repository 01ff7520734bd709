"""Configuration package: environment settings, constants and validated profiles"""

from .config import Config
from .config_loader import ConfigLoader
from .migrations import ProfileMigration
from .schema import (
    EdgeOrder,
    Fallback,
    GraphClass,
    HeuristicConfig,
    HuntConfig,
    KappaRule,
    ProfileSchema,
    SolverConfig,
)
from .search_constants import SearchConstants

__all__ = [
    "Config",
    "ConfigLoader",
    "ProfileMigration",
    "EdgeOrder",
    "Fallback",
    "GraphClass",
    "HeuristicConfig",
    "HuntConfig",
    "KappaRule",
    "ProfileSchema",
    "SolverConfig",
    "SearchConstants",
]
