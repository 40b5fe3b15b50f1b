from .base_repository import BaseRepository
from .axiom_repository import AxiomRepository
from .subsingleton_repository import SubsingletonEntry, SubsingletonRepository

__all__ = [
    "BaseRepository",
    "AxiomRepository",
    "SubsingletonEntry",
    "SubsingletonRepository",
]
