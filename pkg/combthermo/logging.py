import logging
from copy import copy
from typing import Any, Dict, Final, Optional, Tuple

import click

# 通过 extra= 传入的运行上下文, 按此顺序追加到消息末尾
CONTEXT_FIELDS: Final[Tuple[str, ...]] = ("method", "T", "cell")


class CombThermoFormatter(logging.Formatter):
    """带级别颜色的格式化器, 提供 %(levelprefix)s, 并把运行上下文以 key=value 追加到消息后."""

    LEVEL_STYLES: Final[Dict[int, Dict[str, Any]]] = {
        logging.DEBUG: {"fg": "white"},
        logging.INFO: {"fg": "bright_green"},
        logging.WARNING: {"fg": "bright_yellow"},
        logging.ERROR: {"fg": "bright_red"},
        logging.CRITICAL: {"fg": "bright_red", "bg": "bright_white", "bold": True},
    }

    def __init__(
        self, fmt: Optional[str] = None, datefmt: Optional[str] = None, use_colors: bool = True
    ) -> None:
        super().__init__(fmt=fmt, datefmt=datefmt, style="%")
        self.use_colors = use_colors

    def level_prefix(self, record: logging.LogRecord) -> str:
        style = self.LEVEL_STYLES.get(record.levelno)
        if not self.use_colors or style is None:
            return f"[{record.levelname}]"
        return f"[{click.style(record.levelname, **style)}]"

    @staticmethod
    def context_suffix(record: logging.LogRecord) -> str:
        pairs = []
        for name in CONTEXT_FIELDS:
            value = record.__dict__.get(name)
            if value is None:
                continue
            pairs.append(f"{name}={value:g}" if isinstance(value, float) else f"{name}={value}")
        return f" ({', '.join(pairs)})" if pairs else ""

    def formatMessage(self, record: logging.LogRecord) -> str:
        record_copy = copy(record)
        record_copy.__dict__["levelprefix"] = self.level_prefix(record_copy)
        record_copy.__dict__["message"] = record_copy.getMessage() + self.context_suffix(record_copy)
        return super().formatMessage(record_copy)
