"""
Profile Loader with Auto-Migration Support
Loads YAML profiles (files or built-in templates) and validates them
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from pydantic import ValidationError

from .migrations import ProfileMigration
from .schema import ProfileSchema

logger = logging.getLogger(__name__)


def _format_validation_error(e: ValidationError) -> str:
    lines = []
    for error in e.errors():
        field = ".".join(str(x) for x in error["loc"])
        lines.append(f"  - {field}: {error['msg']}")
    return "Profile validation failed:\n" + "\n".join(lines)


class ConfigLoader:
    """Load and validate profiles"""

    TEMPLATES_DIR = Path(__file__).parent / "templates"

    @staticmethod
    def load_profile(profile_path: str, auto_migrate: bool = True) -> ProfileSchema:
        """
        Load a profile from a YAML file

        Args:
            profile_path: Path to profile YAML file
            auto_migrate: Upgrade old versions in memory (default: True)

        Returns:
            Validated profile

        Raises:
            FileNotFoundError: Profile file not found
            ValueError: Invalid YAML, version mismatch without auto_migrate,
                or validation failure
        """
        path = Path(profile_path)
        if not path.exists():
            raise FileNotFoundError(f"Profile file not found: {profile_path}")

        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML syntax: {e}")

        return ConfigLoader._validate(raw, path.name, auto_migrate)

    @staticmethod
    def _validate(raw: Any, label: str, auto_migrate: bool) -> ProfileSchema:
        if not isinstance(raw, dict):
            raise ValueError("Profile must be a YAML dictionary/object")

        version = str(raw.get("config_version", "1.0"))
        if version != ProfileMigration.CURRENT_VERSION:
            if not auto_migrate:
                raise ValueError(
                    f"Profile version mismatch: got v{version}, "
                    f"expected v{ProfileMigration.CURRENT_VERSION}. Set auto_migrate=True to fix."
                )
            logger.info(f"📦 Migrating profile {label} from v{version}")
            raw = ProfileMigration.migrate(raw)

        try:
            profile = ProfileSchema(**raw)
        except ValidationError as e:
            raise ValueError(_format_validation_error(e))
        logger.debug(f"✅ Profile validated: {label}")
        return profile

    @staticmethod
    def load_template(template_name: str) -> ProfileSchema:
        """
        Load a built-in template

        Args:
            template_name: Template name (exact, heuristic, sweep)
        """
        template_file = ConfigLoader.TEMPLATES_DIR / f"{template_name}.yaml"
        if not template_file.exists():
            available = sorted(f.stem for f in ConfigLoader.TEMPLATES_DIR.glob("*.yaml"))
            raise ValueError(
                f"Template '{template_name}' not found. Available: {', '.join(available)}"
            )
        return ConfigLoader.load_profile(str(template_file), auto_migrate=False)

    @staticmethod
    def resolve(name_or_path: str) -> ProfileSchema:
        """A template name or a path to a YAML file"""
        if Path(name_or_path).suffix in (".yaml", ".yml"):
            return ConfigLoader.load_profile(name_or_path)
        return ConfigLoader.load_template(name_or_path)

    @staticmethod
    def list_templates() -> List[Dict[str, str]]:
        """All built-in templates that validate"""
        if not ConfigLoader.TEMPLATES_DIR.exists():
            return []
        templates = []
        for file in sorted(ConfigLoader.TEMPLATES_DIR.glob("*.yaml")):
            try:
                profile = ConfigLoader.load_profile(str(file), auto_migrate=False)
                templates.append({
                    "name": file.stem,
                    "file": file.name,
                    "profile_name": profile.profile_name,
                    "version": profile.config_version,
                })
            except Exception as e:
                logger.warning(f"⚠️ Failed to load template {file.name}: {e}")
        return templates

    @staticmethod
    def validate_yaml_string(yaml_string: str) -> Tuple[bool, Optional[str], Optional[ProfileSchema]]:
        """
        Validate YAML text without touching the filesystem

        Returns:
            Tuple of (is_valid, error_message, profile)
        """
        try:
            raw = yaml.safe_load(yaml_string)
            return True, None, ConfigLoader._validate(raw, "<string>", auto_migrate=True)
        except yaml.YAMLError as e:
            return False, f"Invalid YAML syntax: {e}", None
        except ValueError as e:
            return False, str(e), None

    @staticmethod
    def save_profile(profile: ProfileSchema, file_path: str) -> None:
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(profile.model_dump(), f, allow_unicode=True, indent=2, sort_keys=False)
        logger.info(f"💾 Profile saved: {path}")
