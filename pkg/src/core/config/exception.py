class ConfigError(Exception):
    """Base exception for pipeline, bench and verify configuration errors."""


class ConfigLoadError(ConfigError):
    """Raised when a YAML file does not hold a mapping of schema fields."""


class ConfigSaveError(ConfigError):
    """Raised when the effective configuration cannot be written next to a run."""
