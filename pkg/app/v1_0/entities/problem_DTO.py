from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from app.v1_0.entities.declaration_DTO import Context, Environment
from app.v1_0.entities.term import Term


@dataclass(frozen=True, slots=True)
class SubsingletonDecl:
    type: Term
    proof: Term
    line: Optional[int] = None


@dataclass(frozen=True, slots=True)
class Goal:
    lhs: Term
    rhs: Term
    homogeneous: bool
    statement: Term


@dataclass(slots=True)
class Problem:
    env: Environment
    ctx: Context
    goal: Goal
    hypotheses: List[str] = field(default_factory=list)
    subsingletons: List[SubsingletonDecl] = field(default_factory=list)
    source: Optional[str] = None
