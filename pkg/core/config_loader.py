# core/config_loader.py
import os
from copy import deepcopy
from typing import Any, Dict

import yaml

DEFAULT_CONFIG: Dict[str, Any] = {
    "project": {"name": "openpvc", "version": "0.1.0"},
    "oracle": {"max_n": 24, "max_total_weight": 24},
    "reduction": {"verify_max_source_n": 8},
    "solver": {"auto_verify_max_n": None},
    "output": {"format": "text"},
    "logging": {
        "level": "WARNING",
        "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
    },
}

OUTPUT_FORMATS = ("text", "json")


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigLoader:
    def __init__(self, base_config_path: str = "./configs/base.yaml"):
        self.base_config_path = base_config_path
        self.base_config = self._load_base_config()
        self._apply_env_overrides()

    def _load_base_config(self) -> Dict[str, Any]:
        """Load the base configuration file, falling back to built-in defaults"""
        try:
            with open(self.base_config_path, "r") as f:
                loaded = yaml.safe_load(f) or {}
        except FileNotFoundError:
            return deepcopy(DEFAULT_CONFIG)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in base configuration: {e}")
        if not isinstance(loaded, dict):
            raise ValueError(f"Base configuration must be a mapping: {self.base_config_path}")
        return _merge(DEFAULT_CONFIG, loaded)

    def _apply_env_overrides(self):
        """Apply environment variable overrides"""
        if os.getenv("PVC_ORACLE_MAX_N"):
            try:
                self.base_config["oracle"]["max_n"] = int(os.getenv("PVC_ORACLE_MAX_N"))
            except ValueError:
                raise ValueError(f"PVC_ORACLE_MAX_N must be an integer, got {os.getenv('PVC_ORACLE_MAX_N')!r}")
        if os.getenv("PVC_LOG_LEVEL"):
            self.base_config["logging"]["level"] = os.getenv("PVC_LOG_LEVEL").upper()
        if os.getenv("PVC_OUTPUT_FORMAT"):
            fmt = os.getenv("PVC_OUTPUT_FORMAT").lower()
            if fmt not in OUTPUT_FORMATS:
                raise ValueError(f"PVC_OUTPUT_FORMAT must be one of {OUTPUT_FORMATS}, got {fmt!r}")
            self.base_config["output"]["format"] = fmt

    def get_config(self) -> Dict[str, Any]:
        return deepcopy(self.base_config)

    def get_oracle_max_n(self) -> int:
        """Get the exhaustive-search vertex guard"""
        return int(self.base_config["oracle"]["max_n"])

    def get_oracle_max_total_weight(self) -> int:
        return int(self.base_config["oracle"]["max_total_weight"])

    def get_verify_max_source_n(self) -> int:
        return int(self.base_config["reduction"]["verify_max_source_n"])

    def get_auto_verify_max_n(self) -> int:
        """Verification guard for auto mode; follows the oracle guard unless set"""
        value = self.base_config["solver"].get("auto_verify_max_n")
        return self.get_oracle_max_n() if value is None else int(value)

    def get_output_format(self) -> str:
        return self.base_config["output"]["format"]

    def get_logging_config(self) -> Dict[str, Any]:
        return dict(self.base_config["logging"])

