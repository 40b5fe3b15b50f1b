from itertools import count


class NameSupply:
    """Fresh solver-generated names `prefix#1`, `prefix#2`, ...

    `#` never appears in surface names, so these cannot collide with a problem.
    """

    __slots__ = ("prefix", "_counter")

    def __init__(self, prefix: str) -> None:
        self.prefix = prefix
        self._counter = count(1)

    def fresh(self) -> str:
        return f"{self.prefix}#{next(self._counter)}"
