from typing import Optional

from app.v1_0.entities import Declaration
from app.v1_0.repositories.base_repository import BaseRepository


class AxiomRepository(BaseRepository[str, Declaration]):
    """The axiom table: name -> opaque declaration."""

    def add_axiom(self, decl: Declaration) -> Declaration:
        return self.add(decl.name, decl)

    def get_axiom(self, name: str) -> Optional[Declaration]:
        return self.get(name)

    def names(self) -> list[str]:
        return list(self)
