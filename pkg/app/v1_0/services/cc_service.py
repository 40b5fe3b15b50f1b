from typing import Optional, Union

from app.core.errors import EngineInvariantError
from app.core.logger import logger, trace_logger
from app.v1_0.entities import (
    Assumption,
    CCFailure,
    CCProof,
    CCState,
    Const,
    Declaration,
    EqHyp,
    EqProof,
    FlatContext,
    LocalDef,
    PrEdge,
    Reason,
    Term,
    mk_app,
)
from app.v1_0.services.equality_theory_service import EqualityTheoryService
from app.v1_0.services.proof_builder_service import ProofBuilderService
from app.utils.names import NameSupply


class CongruenceClosureService:
    """Proof-producing congruence closure over a flattened problem.

    One instance serves one `solve`; the state it builds is never shared
    between threads.
    """

    def __init__(
        self,
        theory: EqualityTheoryService,
        proof_builder: ProofBuilderService,
        *,
        subsingletons: bool = True,
        trace: bool = False,
        check_invariants: bool = False,
    ) -> None:
        self.theory = theory
        self.builder = proof_builder
        self.subsingletons = subsingletons
        self.trace = trace
        self.check_invariants = check_invariants
        self.state: Optional[CCState] = None
        self._names = NameSupply("e")

    # ---------- main loop ----------
    def solve(self, flat: FlatContext) -> Union[CCProof, CCFailure]:
        """Close the flat context under congruence and answer its goal.

        Returns:
            CCProof with a proof of the original goal (wrapped in `ofheq` when
            the goal is homogeneous) and the context extended with every
            generated equality; CCFailure with the final partition otherwise.
        """
        st = self.state = CCState(flat)
        self.theory.prepare(flat.max_arity)
        for entry in flat.entries:
            st.pending.append(self._as_pending(entry))
        while st.pending:
            item = st.pending.popleft()
            if isinstance(item, EqProof):
                self.processeq(item)
            else:
                self.initialize(item)

        goal = flat.goal
        if not st.same(goal.lhs, goal.rhs):
            logger.warning(
                "[CCEngine] %s and %s stay apart after %d merges", goal.lhs, goal.rhs, st.merges
            )
            return CCFailure(st.partition(), len(st.congrtable), goal.lhs, goal.rhs)

        proof = self.builder.mkpr(st, goal.lhs, goal.rhs)
        if goal.homogeneous:
            proof = self.theory.ofheq(goal.lhs_type, Const(goal.lhs), Const(goal.rhs), proof)
        logger.info("[CCEngine] goal closed after %d merges", st.merges)
        return CCProof(proof, goal.statement, flat.ctx.extend(*st.extra), st.merges, st.partition())

    @staticmethod
    def _as_pending(entry: Union[Assumption, LocalDef, EqHyp]) -> Union[Assumption, LocalDef, EqProof]:
        if isinstance(entry, EqHyp):
            return EqProof(entry.lhs, entry.rhs, entry.proof, "hyp")
        return entry

    # ---------- congruence table ----------
    def congruent(self, d: LocalDef, e: LocalDef) -> bool:
        return self._state.congruent(d, e)

    def congrhash(self, d: LocalDef) -> int:
        return self._state.congrhash(d)

    def lookup(self, e: LocalDef) -> Optional[LocalDef]:
        """First table entry congruent to `e` that lives in another class."""
        st = self._state
        defs = st.flat.defs
        for name in st.congrtable.candidates(st.congrhash(e)):
            d = defs[name]
            if not st.same(d.name, e.name) and st.congruent(d, e):
                return d
        return None

    # ---------- initialize ----------
    def initialize(self, entry: Union[Assumption, LocalDef]) -> None:
        st = self._state
        c = entry.name
        if c in st.repr:
            raise EngineInvariantError(f"{c} initialized twice")
        st.repr[c] = c
        st.next[c] = c
        st.size[c] = 1
        st.uselists[c] = {}
        st.pr[c] = PrEdge(c, EqProof(c, c, self.theory.hrefl(st.flat.types[c], Const(c))))
        st.order.append(c)

        if isinstance(entry, LocalDef):
            self._inituselist(entry, entry)
            d = self.lookup(entry)
            if d is not None:
                self._enqueue(d.name, c, self.builder.mkcongr(st, d, entry), "congr")
            st.congrtable.insert(c, st.congrhash(entry))

        if self.subsingletons:
            self.propagate_subsingleton(c)

    def _inituselist(self, entry: LocalDef, parent: LocalDef) -> None:
        st = self._state
        while True:
            for x in (entry.fn, entry.arg):
                if x not in st.repr:
                    raise EngineInvariantError(f"{parent.name} uses {x} before it is initialized")
                st.uselists[st.repr[x]][parent.name] = None
            inner = st.flat.defs.get(entry.fn)
            if inner is None:
                return
            entry = inner

    def propagate_subsingleton(self, c: str) -> None:
        """Equate `c` with the known inhabitant of its type's class when that class is a subsingleton.

        The inhabitant kept per class (`subrep`) has a registered type itself.
        Until one shows up, inhabitants of other types in the class wait in
        `subwait`.
        """
        st = self._state
        flat = st.flat
        C = flat.typenodes.get(c)
        if C is None:
            return
        root = st.repr[C]
        a = st.subrep.get(root)
        if a is not None:
            self._enqueue(c, a, self._sse_proof(c, a), "subsingleton")
        elif C in flat.registered:
            st.subrep[root] = c
            self._release_waiting(root)
        else:
            st.subwait.setdefault(root, []).append(c)

    def _sse_proof(self, c: str, a: str) -> Term:
        """`hsse_A C c a (C == A)` where A, the type of `a`, is registered."""
        st = self._state
        flat = st.flat
        C, A = flat.typenodes[c], flat.typenodes[a]
        return mk_app(Const(flat.registered[A]), Const(C), Const(c), Const(a), self.builder.mkpr(st, C, A))

    def _release_waiting(self, root: str) -> None:
        st = self._state
        a = st.subrep[root]
        for c in st.subwait.pop(root, []):
            self._enqueue(c, a, self._sse_proof(c, a), "subsingleton")

    # ---------- processeq ----------
    def processeq(self, eq: EqProof) -> None:
        st = self._state
        a, b = eq.lhs, eq.rhs
        for x in (a, b):
            if x not in st.repr:
                raise EngineInvariantError(f"equality on uninitialized variable {x}")
        if st.repr[a] == st.repr[b]:
            return
        if st.size[st.repr[a]] > st.size[st.repr[b]]:
            a, b = b, a
        ra, rb = st.repr[a], st.repr[b]

        self._removeuses(ra)
        self._flipproofs(a)
        for x in st.members(ra):
            st.repr[x] = rb
        st.pr[a] = PrEdge(b, eq)
        self._reinsertuses(ra)
        st.next[ra], st.next[rb] = st.next[rb], st.next[ra]
        st.uselists[rb].update(st.uselists.pop(ra))
        st.size[rb] += st.size.pop(ra)
        st.merges += 1

        if self.trace:
            trace_logger.info("merge %s %s reason=%s", eq.lhs, eq.rhs, eq.reason)
        logger.debug("[CCEngine] merged %s into %s (%s)", ra, rb, eq.reason)

        if self.subsingletons:
            self._merge_subreps(ra, rb)
        if self.check_invariants:
            self.verify_invariants()

    def _merge_subreps(self, ra: str, rb: str) -> None:
        st = self._state
        a1 = st.subrep.pop(ra, None)
        waiting = st.subwait.pop(ra, [])
        if waiting:
            st.subwait.setdefault(rb, []).extend(waiting)
        a2 = st.subrep.get(rb)
        if a1 is not None and a2 is not None:
            self._enqueue(a1, a2, self._sse_proof(a1, a2), "subsingleton")
        elif a1 is not None:
            st.subrep[rb] = a1
        if rb in st.subrep:
            self._release_waiting(rb)

    def _removeuses(self, r: str) -> None:
        st = self._state
        for name in st.uselists[r]:
            st.congrtable.remove(name)

    def _flipproofs(self, a: str) -> None:
        st = self._state
        path = st.path(a)
        edges = [st.pr[x] for x in path[:-1]]
        for x, edge in zip(path[:-1], edges):
            st.pr[edge.target] = PrEdge(x, edge.eq)

    def _reinsertuses(self, r: str) -> None:
        st = self._state
        defs = st.flat.defs
        for name in list(st.uselists[r]):
            e = defs[name]
            d = self.lookup(e)
            if d is not None:
                self._enqueue(d.name, e.name, self.builder.mkcongr(st, d, e), "congr")
            st.congrtable.insert(name, st.congrhash(e))

    # ---------- helpers ----------
    def _enqueue(self, lhs: str, rhs: str, proof: Term, reason: Reason) -> None:
        """Queue `lhs == rhs`, naming the proof with a fresh definition appended to the context."""
        st = self._state
        types = st.flat.types
        name = self._names.fresh()
        statement = self.theory.heq_type(types[lhs], types[rhs], Const(lhs), Const(rhs))
        st.extra.append(Declaration(name, statement, proof))
        st.pending.append(EqProof(lhs, rhs, Const(name), reason))
        logger.debug("[CCEngine] %s : %s == %s (%s)", name, lhs, rhs, reason)

    @property
    def _state(self) -> CCState:
        if self.state is None:
            raise EngineInvariantError("no solve in progress")
        return self.state

    def verify_invariants(self) -> None:
        """Check the union-find and proof-forest invariants on the whole state.

        Raises:
            EngineInvariantError: on the first violation found.
        """
        st = self._state
        for x, r in st.repr.items():
            if st.repr[st.next[x]] != r or st.repr[r] != r:
                raise EngineInvariantError(f"repr/next disagree at {x}")
        for r, size in st.size.items():
            if st.repr[r] != r:
                raise EngineInvariantError(f"size recorded for non-representative {r}")
            seen = st.members(r)
            if len(seen) != size or len(set(seen)) != size:
                raise EngineInvariantError(f"class of {r} has {len(seen)} members in next, size says {size}")
            if any(st.repr[y] != r for y in seen):
                raise EngineInvariantError(f"next leaves the class of {r}")
        for x, r in st.repr.items():
            y, steps = x, 0
            while st.pr[y].target != y:
                y = st.pr[y].target
                steps += 1
                if steps >= st.size[r]:
                    raise EngineInvariantError(f"proof path from {x} does not reach a root")
            if y != r:
                raise EngineInvariantError(f"proof path from {x} ends at {y}, not {r}")
        flat = st.flat
        for r, a in st.subrep.items():
            A = flat.typenodes.get(a)
            if st.repr[r] != r or A not in flat.registered or st.repr[A] != r:
                raise EngineInvariantError(f"subsingleton inhabitant {a} is not filed under its type class")
        for r, waiting in st.subwait.items():
            if st.repr[r] != r or r in st.subrep:
                raise EngineInvariantError(f"inhabitants {waiting} wait on a class that is settled")
