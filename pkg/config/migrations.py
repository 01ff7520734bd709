"""
Profile Migration System
Upgrades old profile layouts to the current version
"""

import copy
import logging
from typing import Any, Dict, List

logger = logging.getLogger(__name__)


class ProfileMigration:
    """Handles profile version migrations"""

    CURRENT_VERSION = "2.0"

    @staticmethod
    def migrate(profile: Dict[str, Any]) -> Dict[str, Any]:
        """
        Migrate a profile from any old version to the current one

        Args:
            profile: Profile dictionary (any version)

        Returns:
            Migrated profile (current version)
        """
        profile = copy.deepcopy(profile)
        version = str(profile.get("config_version", "1.0"))
        original = version

        logger.info(f"🔄 Profile migration v{version} → v{ProfileMigration.CURRENT_VERSION}")

        if version == "1.0":
            profile = ProfileMigration._migrate_1_0_to_2_0(profile)
            version = "2.0"

        if version == ProfileMigration.CURRENT_VERSION:
            logger.info(f"✅ Migration completed: v{original} → v{version}")
        else:
            logger.warning(f"⚠️ Unknown profile version: {version}")

        return profile

    @staticmethod
    def _migrate_1_0_to_2_0(profile: Dict[str, Any]) -> Dict[str, Any]:
        """
        Migrate v1.0 → v2.0

        Changes:
        - Flat keys move into nested 'solver' / 'heuristic' / 'hunt' sections
        - Rename budget → solver.node_budget
        - Rename tries → heuristic.restarts
        - Rename name → profile_name
        """
        solver = profile.pop("solver", None) or {}
        heuristic = profile.pop("heuristic", None) or {}
        hunt = profile.pop("hunt", None) or {}

        renames = {
            "budget": (solver, "node_budget"),
            "edge_order": (solver, "edge_order"),
            "symmetry_breaking": (solver, "symmetry_breaking"),
            "tries": (heuristic, "restarts"),
            "seed": (heuristic, "seed"),
            "moves_per_stall": (heuristic, "moves_per_stall"),
            "fallback": (heuristic, "fallback"),
            "jobs": (hunt, "jobs"),
        }
        for old, (section, new) in renames.items():
            if old in profile:
                section[new] = profile.pop(old)
                logger.debug(f"  ✅ Moved: {old} → {new}")

        if "name" in profile and "profile_name" not in profile:
            profile["profile_name"] = profile.pop("name")

        profile["solver"] = solver
        profile["heuristic"] = heuristic
        profile["hunt"] = hunt
        profile["config_version"] = "2.0"
        return profile

    @staticmethod
    def is_current_version(profile: Dict[str, Any]) -> bool:
        return str(profile.get("config_version", "1.0")) == ProfileMigration.CURRENT_VERSION

    @staticmethod
    def get_migration_summary(old_version: str, new_version: str) -> List[str]:
        """Human-readable list of changes between two versions"""
        summaries = {
            ("1.0", "2.0"): [
                "Nested solver / heuristic / hunt sections",
                "Renamed budget → solver.node_budget",
                "Renamed tries → heuristic.restarts",
                "Renamed name → profile_name",
            ],
        }
        return summaries.get((old_version, new_version), [])
