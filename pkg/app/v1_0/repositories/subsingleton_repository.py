from dataclasses import dataclass
from typing import Optional

from app.v1_0.entities import Term
from app.v1_0.repositories.base_repository import BaseRepository


@dataclass(frozen=True, slots=True)
class SubsingletonEntry:
    type: Term
    proof: Term
    axiom: str


class SubsingletonRepository(BaseRepository[Term, SubsingletonEntry]):
    """Registered subsingleton types, keyed by their normal form."""

    def lookup(self, normal_type: Term) -> Optional[SubsingletonEntry]:
        return self.get(normal_type)
