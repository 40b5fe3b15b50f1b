from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Literal, Optional

from app.v1_0.entities.declaration_DTO import Context
from app.v1_0.entities.term import Term

Reason = Literal["hyp", "congr", "subsingleton"]


@dataclass(frozen=True, slots=True)
class EqProof:
    """A processed equality: `proof : lhs == rhs`."""
    lhs: str
    rhs: str
    proof: Term
    reason: Reason = "hyp"


@dataclass(frozen=True, slots=True)
class PrEdge:
    target: str
    eq: EqProof


@dataclass(slots=True)
class CCProof:
    proof: Term
    statement: Term
    ctx: Context
    steps: int = 0
    partition: List[List[str]] = field(default_factory=list)


@dataclass(slots=True)
class CCFailure:
    partition: List[List[str]]
    congrtable_size: int
    lhs: str = ""
    rhs: str = ""


@dataclass(slots=True)
class CheckVerdict:
    ok: bool
    location: Optional[str] = None
    expected: Optional[Term] = None
    actual: Optional[Term] = None
    notes: List[str] = field(default_factory=list)
