import json
import logging
import os
import platform

logger = logging.getLogger(__name__)


class ConfigManager:
    def __init__(self, config_dir=None):
        self.config_dir = config_dir or self._get_config_dir()
        self.config_file = os.path.join(self.config_dir, "settings.json")
        self.default_config = {
            "alpha": 2,
            "method": "igel",
            "dcap": "auto",
            "threads": 1,
            "chunk_size": 256,
            "progress": False,
            "log_level": "WARNING",
        }
        self.config = self.load_config()

    def _get_config_dir(self):
        """Returns the per-user settings directory (not created here)."""
        override = os.getenv("IGELKIT_CONFIG_DIR")
        if override:
            return override
        if platform.system() == "Windows" and os.getenv("APPDATA"):
            return os.path.join(os.getenv("APPDATA"), "igelkit")
        return os.path.join(os.path.expanduser("~"), ".igelkit")

    def load_config(self):
        """Loads configuration from JSON file, falling back to defaults."""
        config = self.default_config.copy()
        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, "r", encoding="utf-8") as f:
                    stored = json.load(f)
                if isinstance(stored, dict):
                    config.update(stored)
                else:
                    logger.warning("ignoring %s: expected a JSON object", self.config_file)
            except (json.JSONDecodeError, OSError) as e:
                logger.warning("ignoring unreadable config %s: %s", self.config_file, e)
        threads = os.getenv("IGELKIT_THREADS")
        if threads:
            try:
                config["threads"] = max(1, int(threads))
            except ValueError:
                logger.warning("ignoring IGELKIT_THREADS=%r: not an integer", threads)
        return config

    def save_config(self):
        """Saves current configuration to JSON file."""
        try:
            os.makedirs(self.config_dir, exist_ok=True)
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(self.config, f, indent=4)
        except OSError as e:
            logger.error("error saving config: %s", e)

    def get(self, key, default=None):
        return self.config.get(key, default)

    def set(self, key, value):
        self.config[key] = value
        self.save_config()
