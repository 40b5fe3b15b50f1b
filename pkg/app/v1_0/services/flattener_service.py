from typing import Dict, List, Optional

from app.core.errors import UnsupportedGoalError
from app.core.logger import logger
from app.v1_0.entities import (
    App,
    Assumption,
    Const,
    Context,
    Declaration,
    EqHyp,
    FlatContext,
    FlatEntry,
    FlatGoal,
    LocalDef,
    Sort,
    Term,
    unfold_apps,
)
from app.v1_0.helper.io.printer import show
from app.v1_0.services.equality_theory_service import EqualityTheoryService
from app.v1_0.services.kernel_service import KernelService
from app.utils.names import NameSupply


class _Flattening:
    """Mutable bookkeeping for one `flatten` call."""

    def __init__(self, ctx: Context) -> None:
        self.base = ctx
        self.ctx = ctx
        self.entries: List[FlatEntry] = []
        self.nodes: Dict[Term, str] = {}
        self.emitted: Dict[str, None] = {}
        self.defs: Dict[str, LocalDef] = {}
        self.types: Dict[str, Term] = {}
        self.ntypes: Dict[str, Term] = {}
        self.typenodes: Dict[str, str] = {}
        self.registered: Dict[str, str] = {}
        self.spines: Dict[str, int] = {}
        self.names = NameSupply("c")


class FlattenerService:
    """Names every proper subterm of the equalities in a problem.

    Applications become curried local definitions `c#k := f a` over earlier
    variables, identical subterms (up to alpha) share one name, and
    abstractions, Pi types and `Type` become atomic definitions. Hypotheses
    and the goal are rewritten to heterogeneous equalities between variables.
    """

    def __init__(self, kernel: KernelService, theory: EqualityTheoryService) -> None:
        self.kernel = kernel
        self.theory = theory

    def flatten(self, ctx: Context, goal: Term, *, subsingletons: bool = True) -> FlatContext:
        """Flatten `ctx` and `goal` into the engine's input.

        Args:
            ctx: Problem context (falls back to the problem environment).
            goal: `heq A B a b` or `eq A a b`.
            subsingletons: When set and a subsingleton is registered, every variable
                whose type is a name or an application gets its type flattened too,
                before the variable, and `registered` marks the subsingleton types.

        Returns:
            A FlatContext whose `ctx` extends `ctx` with the generated definitions.

        Raises:
            UnsupportedGoalError: the goal is not an equality.
        """
        goal_eq = self.theory.match_equation(goal, ctx)
        if goal_eq is None:
            raise UnsupportedGoalError(f"goal '{show(goal)}' is not an equality")

        st = _Flattening(ctx)
        use_sub = subsingletons and self.theory.subsingletons.count() > 0

        for decl in ctx:
            eq = self.theory.match_equation(decl.type, ctx)
            if eq is not None:
                lhs = self._node(st, eq.lhs, use_sub)
                rhs = self._node(st, eq.rhs, use_sub)
                proof: Term = Const(decl.name)
                if eq.homogeneous:
                    proof = self.theory.ofeq(eq.lhs_type, eq.lhs, eq.rhs, proof)
                st.entries.append(EqHyp(decl.name, lhs, rhs, proof))
                continue
            self._emit_atom(st, decl.name, decl.type, decl.value, use_sub)
            if decl.value is not None and isinstance(decl.value, (App, Const)):
                target = self._node(st, decl.value, use_sub)
                if target != decl.name:
                    proof = self.theory.hrefl(decl.type, Const(decl.name))
                    st.entries.append(EqHyp(None, decl.name, target, proof))

        lhs = self._node(st, goal_eq.lhs, use_sub)
        rhs = self._node(st, goal_eq.rhs, use_sub)
        flat = FlatContext(
            entries=st.entries,
            goal=FlatGoal(lhs, rhs, goal_eq.homogeneous, goal, goal_eq.lhs_type, goal_eq.rhs_type),
            ctx=st.ctx,
            defs=st.defs,
            types=st.types,
            ntypes=st.ntypes,
            typenodes=st.typenodes,
            registered=st.registered,
            max_arity=max(st.spines.values(), default=0),
        )
        logger.info(
            "[FlattenerService] %d entries, %d local definitions, goal %s == %s",
            len(flat.entries), len(flat.defs), lhs, rhs,
        )
        return flat

    # ---------- nodes ----------
    def _node(self, st: _Flattening, t: Term, use_sub: bool) -> str:
        found = st.nodes.get(t)
        if found is not None:
            return found
        if isinstance(t, Const):
            if t.name not in st.emitted:
                decl = self.kernel.resolve(t.name, st.base)
                self._emit_atom(st, t.name, decl.type, decl.value, use_sub)
            name = t.name
        elif isinstance(t, App):
            fn = self._node(st, t.fn, use_sub)
            arg = self._node(st, t.arg, use_sub)
            ty = self.kernel.infer_type(t, st.base)
            typenode = self._typenode(st, ty, use_sub)
            name = st.names.fresh()
            d = LocalDef(name, fn, arg, ty)
            st.ctx = st.ctx.extend(Declaration(name, ty, App(Const(fn), Const(arg))))
            st.defs[name] = d
            st.spines[name] = st.spines.get(fn, 0) + 1
            self._record(st, name, ty, typenode)
            st.entries.append(d)
        else:
            # binders and Type are atoms
            ty = self.kernel.infer_type(t, st.base)
            name = st.names.fresh()
            st.ctx = st.ctx.extend(Declaration(name, ty, t))
            self._emit_atom(st, name, ty, t, use_sub, declared=True)
        st.nodes[t] = name
        return name

    def _emit_atom(
        self,
        st: _Flattening,
        name: str,
        ty: Term,
        value: Optional[Term],
        use_sub: bool,
        declared: bool = False,
    ) -> None:
        typenode = self._typenode(st, ty, use_sub)
        self._record(st, name, ty, typenode)
        st.entries.append(Assumption(name, ty, value))
        st.nodes.setdefault(Const(name), name)
        logger.debug("[FlattenerService] atom %s%s", name, " (generated)" if declared else "")

    def _record(self, st: _Flattening, name: str, ty: Term, typenode: Optional[str]) -> None:
        st.emitted[name] = None
        st.types[name] = ty
        st.ntypes[name] = self.kernel.normalize(ty, st.base)
        if typenode is not None:
            st.typenodes[name] = typenode

    def _typenode(self, st: _Flattening, ty: Term, use_sub: bool) -> Optional[str]:
        if not use_sub or isinstance(ty, Sort):
            return None
        entry = self.theory.lookup_subsingleton(ty, st.base)
        # unregistered binder types never become type nodes
        if entry is None and not isinstance(ty, (Const, App)):
            return None
        node = self._node(st, ty, use_sub)
        if entry is not None:
            st.registered[node] = entry.axiom
        return node
