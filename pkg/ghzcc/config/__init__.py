from .config_manager import ConfigManager, ConfigurationError, get_config
from .types import AppConfig, GridSpec, RunConfig

__all__ = [
    "AppConfig",
    "ConfigManager",
    "ConfigurationError",
    "GridSpec",
    "RunConfig",
    "get_config",
]
