"""Configuration management for hoarekit."""

import copy
import os
import yaml
from pathlib import Path
from typing import Dict, Any, Optional

from ..errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent.parent

DEFAULTS: Dict[str, Any] = {
    "checker": {"mode": "default", "workers": 4},
    "printer": {"style": "unicode"},
    "interpreter": {"max_steps": 1_000_000, "max_natural": 2**63 - 1},
    "logging": {"level": "WARNING", "file": None},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Configuration manager for the project."""

    def __init__(self, config_file: Optional[str] = None):
        """Initialize configuration from a YAML file.

        Args:
            config_file: Explicit file; falls back to ``HOAREKIT_CONFIG`` and
                then to ``config/default.yaml`` under the project root
        """
        if config_file is None:
            config_file = os.environ.get("HOAREKIT_CONFIG") or PROJECT_ROOT / "config" / "default.yaml"

        self.config_file = Path(config_file)
        self._config = _merge(DEFAULTS, self._load_config())

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        if not self.config_file.exists():
            return {}
        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                return yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Error parsing configuration file: {e}")
        except OSError as e:
            raise ConfigError(f"Could not read configuration file {self.config_file}: {e}")

    def get(self, key: str, default=None) -> Any:
        """Get configuration value by dot-separated key."""
        keys = key.split('.')
        value = self._config

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def get_path(self, key: str) -> Optional[Path]:
        """Get path configuration value as Path object, resolved against the project root."""
        path_str = self.get(key)
        if path_str:
            return PROJECT_ROOT / path_str
        return None

    def print_style(self) -> str:
        """Printer style, with ``HOAREKIT_STYLE`` taking precedence over the file."""
        return os.environ.get("HOAREKIT_STYLE") or self.get("printer.style", "unicode")


# Global configuration instance
config = Config()
