# src/conetensor/config.py
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict

# Configure logger
logger = logging.getLogger(__name__)

# Config paths
CONFIG_DIR = Path.home() / ".conetensor"
CONFIG_FILE = CONFIG_DIR / "settings.json"

ENV_MAX_DD_ROWS = "CONETENSOR_MAX_DD_ROWS"
ENV_WORKERS = "CONETENSOR_WORKERS"

DEFAULT_CONFIG = {
    "max_dd_rows": 4096,
    "workers": 4,
    "random_seed": 20240601,
    "default_format": "text",
    "strict_documents": True,
}

SETTINGS_KEYS = list(DEFAULT_CONFIG)


class ConfigManager:
    @staticmethod
    def load_config() -> Dict[str, Any]:
        """Load settings from the JSON file, merged over the defaults."""
        if not CONFIG_FILE.exists():
            return DEFAULT_CONFIG.copy()

        try:
            with open(CONFIG_FILE, "r", encoding="utf-8") as f:
                data = json.load(f)
                # Merge with defaults to handle new keys
                config = DEFAULT_CONFIG.copy()
                config.update(data)
                return config
        except Exception as e:
            logger.warning(f"Could not load configuration: {e}")
            return DEFAULT_CONFIG.copy()

    @staticmethod
    def save_config(**kwargs: Any) -> None:
        """Persist the current settings updated with ``kwargs``."""
        current = ConfigManager.load_config()
        current.update(kwargs)

        try:
            CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
            with open(CONFIG_FILE, "w", encoding="utf-8") as f:
                json.dump(current, f, indent=4)
        except Exception as e:
            logger.warning(f"Error saving configuration: {e}")

    @staticmethod
    def update_settings(settings: Dict[str, Any]) -> None:
        """Update only known settings keys."""
        current = ConfigManager.load_config()
        for key in SETTINGS_KEYS:
            if key in settings:
                current[key] = settings[key]

        try:
            CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
            with open(CONFIG_FILE, "w", encoding="utf-8") as f:
                json.dump(current, f, indent=4)
        except Exception as e:
            logger.warning(f"Error saving settings: {e}")

    # --- Resolved values (environment wins over the file) ---
    @staticmethod
    def _int_setting(env_name: str, key: str) -> int:
        raw = os.environ.get(env_name)
        if raw:
            try:
                value = int(raw)
                if value > 0:
                    return value
            except ValueError:
                pass
            logger.warning(f"Ignoring invalid {env_name}={raw!r}")
        return int(ConfigManager.load_config().get(key, DEFAULT_CONFIG[key]))

    @staticmethod
    def max_dd_rows() -> int:
        return ConfigManager._int_setting(ENV_MAX_DD_ROWS, "max_dd_rows")

    @staticmethod
    def workers() -> int:
        return max(1, ConfigManager._int_setting(ENV_WORKERS, "workers"))
