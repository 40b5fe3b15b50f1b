from dataclasses import dataclass
from typing import Literal, Optional

Status = Literal["PROVED", "UNKNOWN", "REJECTED", "ERROR"]

EXIT_CODES = {"PROVED": 0, "UNKNOWN": 1, "ERROR": 2, "REJECTED": 3}


@dataclass(slots=True)
class RunReport:
    status: Status
    exit_code: int
    text: str
    source: Optional[str] = None
    elapsed: float = 0.0
