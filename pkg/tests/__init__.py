from .utils import tmp

__all__ = ["tmp"]
