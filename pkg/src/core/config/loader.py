from __future__ import annotations

from pathlib import Path
from typing import Any, TypeVar

import yaml
from pydantic import BaseModel, ValidationError

from src.core.config.exception import ConfigLoadError

T = TypeVar("T", bound=BaseModel)


class ConfigLoader:
    """Loads YAML files over schema defaults into Pydantic models"""

    @staticmethod
    def read_yaml(config_path: Path) -> dict[str, Any] | None:
        """Parse a YAML mapping; None for an empty file"""
        with Path(config_path).open("r") as f:
            config_dict = yaml.safe_load(f)
        if config_dict is not None and not isinstance(config_dict, dict):
            raise ConfigLoadError(f"Expected a mapping in {config_path}")
        return config_dict

    @staticmethod
    def load_config(config_path: Path, config_class: type[T]) -> T | None:
        """
        Load a configuration, letting the file override the schema defaults
        """
        config_dict = ConfigLoader.read_yaml(config_path)
        if config_dict is None:
            return None
        try:
            defaults = config_class().model_dump(mode="json")
        except ValidationError:
            defaults = {}
        return config_class(**ConfigLoader._deep_merge(defaults, config_dict))

    @staticmethod
    def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
        """Deep merge two dictionaries"""
        result = base.copy()
        for key, value in override.items():
            if (
                key in result
                and isinstance(result[key], dict)
                and isinstance(value, dict)
            ):
                result[key] = ConfigLoader._deep_merge(result[key], value)
            else:
                result[key] = value
        return result
