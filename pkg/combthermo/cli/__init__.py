from combthermo.cli.main import cli

__all__ = ["cli"]
