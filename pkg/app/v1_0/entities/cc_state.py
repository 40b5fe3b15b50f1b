from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, List, Optional, Union

from app.v1_0.entities.declaration_DTO import Declaration
from app.v1_0.entities.flat_DTO import Assumption, FlatContext, LocalDef
from app.v1_0.entities.proof_DTO import EqProof, PrEdge
from app.v1_0.entities.term import Const, hashcombine, term_hash

Pending = Union[Assumption, LocalDef, EqProof]


class CongruenceTable:
    """Hash buckets of local definitions.

    Each entry remembers the key it was filed under, so it can be removed
    after the representatives behind that key have changed.
    """

    __slots__ = ("_buckets", "_keys")

    def __init__(self) -> None:
        self._buckets: Dict[int, Dict[str, None]] = {}
        self._keys: Dict[str, int] = {}

    def insert(self, name: str, key: int) -> None:
        self.remove(name)
        self._buckets.setdefault(key, {})[name] = None
        self._keys[name] = key

    def remove(self, name: str) -> None:
        key = self._keys.pop(name, None)
        if key is None:
            return
        bucket = self._buckets[key]
        bucket.pop(name, None)
        if not bucket:
            del self._buckets[key]

    def candidates(self, key: int) -> List[str]:
        return list(self._buckets.get(key, ()))

    def key_of(self, name: str) -> Optional[int]:
        return self._keys.get(name)

    def __contains__(self, name: object) -> bool:
        return name in self._keys

    def __len__(self) -> int:
        return len(self._keys)


@dataclass(slots=True)
class CCState:
    flat: FlatContext
    repr: Dict[str, str] = field(default_factory=dict)
    next: Dict[str, str] = field(default_factory=dict)
    size: Dict[str, int] = field(default_factory=dict)
    pr: Dict[str, PrEdge] = field(default_factory=dict)
    pending: Deque[Pending] = field(default_factory=deque)
    congrtable: CongruenceTable = field(default_factory=CongruenceTable)
    uselists: Dict[str, Dict[str, None]] = field(default_factory=dict)
    subrep: Dict[str, str] = field(default_factory=dict)
    # inhabitants waiting for an inhabitant of a registered type in their type class
    subwait: Dict[str, List[str]] = field(default_factory=dict)
    order: List[str] = field(default_factory=list)
    extra: List[Declaration] = field(default_factory=list)
    merges: int = 0

    # ---------- queries ----------
    def same(self, a: str, b: str) -> bool:
        return self.repr[a] == self.repr[b]

    def congruent(self, d: LocalDef, e: LocalDef) -> bool:
        defs, ntypes = self.flat.defs, self.flat.ntypes
        while True:
            if self.repr[d.arg] != self.repr[e.arg]:
                return False
            f, g = d.fn, e.fn
            if self.repr[f] == self.repr[g] and ntypes[f] == ntypes[g]:
                return True
            df, dg = defs.get(f), defs.get(g)
            if df is None or dg is None:
                return False
            d, e = df, dg

    def congrhash(self, d: LocalDef) -> int:
        return hashcombine(term_hash(Const(self.repr[d.fn])), term_hash(Const(self.repr[d.arg])))

    def members(self, root: str) -> List[str]:
        out = [root]
        x = self.next[root]
        while x != root:
            out.append(x)
            x = self.next[x]
        return out

    def path(self, x: str) -> List[str]:
        """Proof-forest path from `x` up to the root of its tree."""
        out = [x]
        edge = self.pr[x]
        while edge.target != out[-1]:
            out.append(edge.target)
            edge = self.pr[edge.target]
        return out

    def partition(self) -> List[List[str]]:
        classes: Dict[str, List[str]] = {}
        for x in self.order:
            classes.setdefault(self.repr[x], []).append(x)
        return list(classes.values())
