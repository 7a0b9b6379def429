import logging
import logging.config
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import ValidationError

from combthermo.config.models import RunConfig
from combthermo.const import (
    CONFIG_DIR_PATH,
    DEFAULT_LOGGER_CONFIG,
    LOGGING_CONFIG_ENV,
    LOGGING_CONFIG_NAMES,
    PACKAGE_LOGGER,
)
from combthermo.exception import ConfigurationException
from combthermo.meta import SingletonMeta
from combthermo.utils.yaml_utils import yaml_to_dict


class ConfigManager(metaclass=SingletonMeta):
    # 日志logger
    logger: Optional[logging.Logger] = None

    def __init__(self):
        self.logger = self._configure_logging()

    def load_run_config(self, source: Union[str, Path, Dict[str, Any]]) -> RunConfig:
        """
        加载运行配置 (YAML 文件路径或已解析的字典)

        Args:
            source: 配置文件路径或字典

        Raises:
            ConfigurationException: 文件缺失、YAML 语法错误或字段校验失败

        Returns:
            RunConfig: 校验后的配置
        """
        if isinstance(source, dict):
            config_dict = source
        else:
            try:
                config_dict = yaml_to_dict(source)
            except FileNotFoundError as e:
                raise ConfigurationException(str(e))
            except yaml.YAMLError as e:
                raise ConfigurationException(f"Malformed YAML in {source}: {e}")
            self.logger.info(f"加载配置文件 [{source}]")

        try:
            return RunConfig(**config_dict)
        except ValidationError as e:
            raise ConfigurationException(f"Invalid run config: {e}")
        except TypeError as e:
            raise ConfigurationException(f"Invalid run config: {e}")

    def set_level(self, level: Union[int, str]) -> None:
        logging.getLogger(PACKAGE_LOGGER).setLevel(level)

    def _configure_logging(self) -> logging.Logger:
        """按 COMB_THERMO_LOGGING、config/logging.yml、内置配置的顺序配置日志"""
        source = self._find_logging_config()
        logging_config = yaml_to_dict(str(source)) if source else DEFAULT_LOGGER_CONFIG
        if PACKAGE_LOGGER not in logging_config.get("loggers", {}):
            raise ConfigurationException(f"Logging config {source} does not configure the '{PACKAGE_LOGGER}' logger")

        # 文件 handler 的日志目录
        for handler in logging_config.get("handlers", {}).values():
            filename = handler.get("filename")
            if filename:
                Path(filename).parent.mkdir(parents=True, exist_ok=True)

        logging.config.dictConfig(logging_config)
        logger = logging.getLogger(__name__)
        logger.debug(f"日志配置来源 [{source or '内置默认配置'}]")
        return logger

    @staticmethod
    def _find_logging_config() -> Optional[Path]:
        """
        查找日志配置文件

        Raises:
            ConfigurationException: COMB_THERMO_LOGGING 指向不存在的文件

        Returns:
            Optional[Path]: 配置文件路径, 未找到时为 None
        """
        override = os.getenv(LOGGING_CONFIG_ENV)
        if override:
            path = Path(override)
            if not path.is_file():
                raise ConfigurationException(f"{LOGGING_CONFIG_ENV}={override}: no such logging config")
            return path
        for name in LOGGING_CONFIG_NAMES:
            path = CONFIG_DIR_PATH / name
            if path.is_file():
                return path
        return None
