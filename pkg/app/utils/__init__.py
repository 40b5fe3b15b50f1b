from .names import NameSupply
from .timing import Stopwatch, stopwatch

__all__ = ["NameSupply", "Stopwatch", "stopwatch"]
