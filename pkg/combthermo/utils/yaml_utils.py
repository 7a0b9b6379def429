from pathlib import Path
from typing import Union

import yaml

from combthermo.const import SYSTEM_ENCODING


def yaml_to_dict(file_path: Union[str, Path], encoding: str = SYSTEM_ENCODING) -> dict:
    """yaml转dict

    Args:
        file_path (str): yaml文件路径
        encoding (str, optional): 文件编码. Defaults to 'utf-8'.

    Raises:
        FileNotFoundError: 文件不存在

    Returns:
        dict: 字典, 空文件返回空字典
    """
    file_path = Path(file_path)
    if not file_path.exists():
        raise FileNotFoundError(f"请确认yaml文件路径是否正确: {file_path}")

    yaml_content = file_path.read_text(encoding=encoding)
    yaml_dict = yaml.safe_load(yaml_content)
    return yaml_dict or {}
