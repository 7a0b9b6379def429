from combthermo.config.manager import ConfigManager
from combthermo.config.models import RunConfig

__all__ = ["ConfigManager", "RunConfig"]
