from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple

from app.core.errors import MalformedTermError
from app.v1_0.entities.term import Term


@dataclass(frozen=True, slots=True)
class Declaration:
    """`name : type` (assumption) or `name : type := value` (definition)."""
    name: str
    type: Term
    value: Optional[Term] = None

    @property
    def is_definition(self) -> bool:
        return self.value is not None


class _Lineage:
    """Cache token shared by a chain of extensions that never rebinds a name."""
    __slots__ = ()


class Context:
    """Ordered, immutable sequence of declarations (the local context).

    Lookups fall back to the global environment, so a context is all the
    kernel needs to resolve a constant besides the axiom table.
    """

    __slots__ = ("_decls", "_index", "env", "lineage", "_forked")

    def __init__(
        self,
        decls: Iterable[Declaration] = (),
        env: Optional["Environment"] = None,
        lineage: Optional[_Lineage] = None,
    ) -> None:
        self._decls: Tuple[Declaration, ...] = tuple(decls)
        self._index: Dict[str, Declaration] = {}
        for d in self._decls:
            if d.name in self._index:
                raise MalformedTermError(f"duplicate declaration '{d.name}'")
            self._index[d.name] = d
        self.env = env
        self.lineage = lineage if lineage is not None else _Lineage()
        self._forked = False

    def lookup(self, name: str) -> Optional[Declaration]:
        d = self._index.get(name)
        if d is None and self.env is not None:
            return self.env.lookup(name)
        return d

    def local(self, name: str) -> Optional[Declaration]:
        return self._index.get(name)

    def extend(self, *decls: Declaration) -> "Context":
        # the first extension keeps the cache lineage, siblings get a fresh one
        lineage = None
        if not self._forked:
            self._forked = True
            lineage = self.lineage
        return type(self)(self._decls + tuple(decls), env=self.env, lineage=lineage)

    @property
    def decls(self) -> Tuple[Declaration, ...]:
        return self._decls

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(d.name for d in self._decls)

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and self.lookup(name) is not None

    def __iter__(self) -> Iterator[Declaration]:
        return iter(self._decls)

    def __len__(self) -> int:
        return len(self._decls)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(self.names)})"


class Environment(Context):
    """Global declarations (axioms); the root of every context chain."""

    __slots__ = ()

    def __init__(self, decls: Iterable[Declaration] = (), env: None = None, lineage: Optional[_Lineage] = None) -> None:
        super().__init__(decls, env=None, lineage=lineage)
