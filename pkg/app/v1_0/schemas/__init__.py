from .run_schema import RunOptions

__all__ = ["RunOptions"]
