import time
from contextlib import contextmanager
from typing import Iterator


class Stopwatch:
    __slots__ = ("started", "elapsed")

    def __init__(self) -> None:
        self.started = time.perf_counter()
        self.elapsed = 0.0


@contextmanager
def stopwatch() -> Iterator[Stopwatch]:
    """
    Measure the wall time of the enclosed block; `elapsed` is set on exit,
    also when the block raises.
    """
    sw = Stopwatch()
    try:
        yield sw
    finally:
        sw.elapsed = time.perf_counter() - sw.started
