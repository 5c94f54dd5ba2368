import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class ConfigManager:
    """Manages toolkit configuration: solver budgets, size caps, report settings."""

    CONFIG_DIR = Path.home() / '.spc_toolkit'
    CONFIG_FILE = CONFIG_DIR / 'config.json'

    DEFAULT_CONFIG = {
        'hom_budget': 10 ** 8,
        'threads': 1,
        'deterministic': True,
        'long_tests': False,
        'cayley_max_dim': 20,
        'spc_max_dim': 16,
        'iso_max_vertices': 64,
        'oracle_max_vertices': 12,
        'packs_max_negative_girth': 8,
        'chi_candidate_factor': 4,
        'report_indent': 2,
        'log_level': 'WARNING',
        'export_dir': str(Path.home() / 'spc_reports')
    }

    def __init__(self, config_file: Optional[Path] = None):
        if config_file is not None:
            self.CONFIG_FILE = Path(config_file)
            self.CONFIG_DIR = self.CONFIG_FILE.parent
        self._config: Dict[str, Any] = {}
        self._load_config()

    def _ensure_config_dir(self):
        """Create config directory if it doesn't exist."""
        self.CONFIG_DIR.mkdir(parents=True, exist_ok=True)

    def _load_config(self):
        """Load configuration from file, merged over the defaults."""
        if self.CONFIG_FILE.exists():
            try:
                with open(self.CONFIG_FILE, 'r') as f:
                    saved_config = json.load(f)
                self._config = {**self.DEFAULT_CONFIG, **saved_config}
            except (OSError, ValueError) as e:
                logger.warning("Error loading config %s: %s", self.CONFIG_FILE, e)
                self._config = self.DEFAULT_CONFIG.copy()
        else:
            self._config = self.DEFAULT_CONFIG.copy()

    def _save_config(self):
        try:
            self._ensure_config_dir()
            with open(self.CONFIG_FILE, 'w') as f:
                json.dump(self._config, f, indent=2)
        except OSError as e:
            logger.warning("Error saving config %s: %s", self.CONFIG_FILE, e)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value."""
        return self._config.get(key, default)

    def set(self, key: str, value: Any):
        """Set a configuration value."""
        self._config[key] = value
        self._save_config()

    def update(self, values: Dict[str, Any]):
        """Update multiple configuration values."""
        self._config.update(values)
        self._save_config()

    def override(self, values: Dict[str, Any]):
        """Apply values for this process only; nothing is written."""
        self._config.update({k: v for k, v in values.items() if v is not None})

    def get_all(self) -> Dict[str, Any]:
        return self._config.copy()

    def reset(self):
        """Reset configuration to defaults."""
        self._config = self.DEFAULT_CONFIG.copy()
        self._save_config()


# Global config instance
_config_instance: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """Get the global configuration instance."""
    global _config_instance
    if _config_instance is None:
        _config_instance = ConfigManager()
    return _config_instance
