from combthermo.utils.yaml_utils import yaml_to_dict

__all__ = ["yaml_to_dict"]
