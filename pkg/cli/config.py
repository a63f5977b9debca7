# cli/config.py
from typing import Any, Dict, Optional

from core.config_loader import ConfigLoader


class CLIConfig:
    def __init__(self, config_file: Optional[str] = None):
        self.config_loader = ConfigLoader(config_file) if config_file else ConfigLoader()
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Flatten the loader's sections into the keys the commands read"""
        loader = self.config_loader
        return {
            "oracle_max_n": loader.get_oracle_max_n(),
            "oracle_max_total_weight": loader.get_oracle_max_total_weight(),
            "verify_max_source_n": loader.get_verify_max_source_n(),
            "auto_verify_max_n": loader.get_auto_verify_max_n(),
            "output_format": loader.get_output_format(),
            "log_level": loader.get_logging_config()["level"],
            "log_format": loader.get_logging_config()["format"],
        }

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)
