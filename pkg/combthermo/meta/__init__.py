from combthermo.meta.single_meta import SingletonMeta

__all__ = ["SingletonMeta"]
