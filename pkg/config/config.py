"""
⚙️ Environment settings for the acyclic edge coloring lab
📌 Every value can be overridden from the environment or a .env file
"""

from decouple import config


class Config:
    """
    Runtime defaults

    🔧 Usage:
    1. Export AECL_* variables (or put them in .env) to change a default
    2. CLI flags still win over anything set here
    """

    # ==================== SEARCH ====================
    NODE_BUDGET: int = config("AECL_NODE_BUDGET", default=0, cast=int)  # 0 = unlimited
    DEFAULT_SEED: int = config("AECL_SEED", default=0, cast=int)

    # ==================== LAB LIMITS ====================
    ENUM_MAX_N: int = config("AECL_ENUM_MAX_N", default=8, cast=int)
    MAD_MAX_N: int = config("AECL_MAD_MAX_N", default=20, cast=int)
    GOOD3_MAX_EDGES: int = config("AECL_GOOD3_MAX_EDGES", default=12, cast=int)
    FACT2_MAX_EDGES: int = config("AECL_FACT2_MAX_EDGES", default=12, cast=int)

    # ==================== RUNTIME ====================
    JOBS: int = config("AECL_JOBS", default=1, cast=int)
    LOG_LEVEL: str = config("AECL_LOG_LEVEL", default="WARNING")
    PROFILE: str = config("AECL_PROFILE", default="")
