from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from app.v1_0.entities.declaration_DTO import Context
from app.v1_0.entities.term import Term


@dataclass(frozen=True, slots=True)
class Assumption:
    name: str
    type: Term
    value: Optional[Term] = None


@dataclass(frozen=True, slots=True)
class LocalDef:
    """`name := fn arg`, both sides being engine variables."""
    name: str
    fn: str
    arg: str
    type: Term


@dataclass(frozen=True, slots=True)
class EqHyp:
    """A hypothesis `lhs == rhs`; `proof` already has the heterogeneous form."""
    name: Optional[str]
    lhs: str
    rhs: str
    proof: Term
    reason: str = "hyp"


FlatEntry = Union[Assumption, LocalDef, EqHyp]


@dataclass(slots=True)
class FlatGoal:
    lhs: str
    rhs: str
    homogeneous: bool
    statement: Term
    lhs_type: Term
    rhs_type: Term


@dataclass(slots=True)
class FlatContext:
    entries: List[FlatEntry]
    goal: FlatGoal
    ctx: Context
    defs: Dict[str, LocalDef] = field(default_factory=dict)
    types: Dict[str, Term] = field(default_factory=dict)
    ntypes: Dict[str, Term] = field(default_factory=dict)
    typenodes: Dict[str, str] = field(default_factory=dict)
    registered: Dict[str, str] = field(default_factory=dict)
    max_arity: int = 0

    @property
    def variables(self) -> List[str]:
        return [e.name for e in self.entries if not isinstance(e, EqHyp)]

    @property
    def hypotheses(self) -> List[EqHyp]:
        return [e for e in self.entries if isinstance(e, EqHyp)]

    def is_def(self, name: str) -> bool:
        return name in self.defs
