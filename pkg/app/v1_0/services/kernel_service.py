import sys
from typing import Dict, Tuple

from app.core.errors import MalformedTermError, TypeMismatchError, UnboundNameError
from app.core.logger import logger
from app.core.settings import settings
from app.v1_0.entities import (
    App,
    Const,
    Context,
    Declaration,
    Lam,
    Pi,
    Sort,
    Term,
    TYPE,
    Var,
    instantiate,
    lift,
    mk_apps,
    occurs,
    unfold_apps,
)
from app.v1_0.entities.term import constants, lower
from app.v1_0.helper.io.printer import show
from app.v1_0.repositories import AxiomRepository

sys.setrecursionlimit(max(sys.getrecursionlimit(), settings.RECURSION_LIMIT))

Binders = Tuple[Term, ...]


class KernelService:
    """Trusted core: reduction, definitional equality and type inference.

    Constants resolve through the context (which falls back to its global
    environment) and then the axiom table. Caches are per instance, so an
    instance must stay with one thread.
    """

    def __init__(self, axiom_repository: AxiomRepository) -> None:
        self.axioms = axiom_repository
        self._nf_cache: Dict[Tuple[object, Term], Term] = {}
        self._ty_cache: Dict[Tuple[object, Binders, Term], Term] = {}

    # ---------- names ----------
    def resolve(self, name: str, ctx: Context) -> Declaration:
        decl = ctx.lookup(name)
        if decl is None:
            decl = self.axioms.get_axiom(name)
        if decl is None:
            raise UnboundNameError(name)
        return decl

    # ---------- reduction ----------
    def whnf(self, t: Term, ctx: Context) -> Term:
        """Weak head normal form under beta and delta/zeta at the head."""
        while True:
            head, args = unfold_apps(t)
            if isinstance(head, Const):
                decl = self.resolve(head.name, ctx)
                if decl.value is None:
                    return t
                t = mk_apps(decl.value, args)
            elif isinstance(head, Lam) and args:
                t = mk_apps(instantiate(head.body, args[0]), args[1:])
            else:
                return t

    def normalize(self, t: Term, ctx: Context) -> Term:
        """Normal-order normal form, with eta on abstractions.

        Raises:
            MalformedTermError: a name is out of scope.
        """
        key = (ctx.lineage, t)
        hit = self._nf_cache.get(key)
        if hit is not None:
            return hit
        w = self.whnf(t, ctx)
        if isinstance(w, Lam):
            body = self.normalize(w.body, ctx)
            if isinstance(body, App) and body.arg == Var(0) and not occurs(body.fn, 0):
                out = lower(body.fn)
            else:
                out = Lam(w.name, self.normalize(w.domain, ctx), body)
        elif isinstance(w, Pi):
            out = Pi(w.name, self.normalize(w.domain, ctx), self.normalize(w.body, ctx))
        else:
            head, args = unfold_apps(w)
            out = mk_apps(head, [self.normalize(a, ctx) for a in args])
        self._nf_cache[key] = out
        self._nf_cache[(ctx.lineage, out)] = out
        return out

    def defeq(self, t: Term, s: Term, ctx: Context) -> bool:
        if t == s:
            return True
        return self.normalize(t, ctx) == self.normalize(s, ctx)

    # ---------- typing ----------
    def infer_type(self, t: Term, ctx: Context, binders: Binders = ()) -> Term:
        """Type of `t`; `binders[i]` is the type of loose index i, as written under its own binders.

        Raises:
            TypeMismatchError: an argument does not fit its function, or a
                binder domain is not a type.
            UnboundNameError: a constant is not declared anywhere.
        """
        key = (ctx.lineage, binders, t)
        hit = self._ty_cache.get(key)
        if hit is not None:
            return hit
        out = self._infer(t, ctx, binders)
        self._ty_cache[key] = out
        return out

    def _infer(self, t: Term, ctx: Context, binders: Binders) -> Term:
        if isinstance(t, Var):
            if t.index >= len(binders):
                raise MalformedTermError(f"dangling bound variable #{t.index}")
            return lift(binders[t.index], t.index + 1)
        if isinstance(t, Const):
            return self.resolve(t.name, ctx).type
        if isinstance(t, Sort):
            return TYPE
        if isinstance(t, App):
            fty = self.whnf(self.infer_type(t.fn, ctx, binders), ctx)
            if not isinstance(fty, Pi):
                raise TypeMismatchError(
                    t.fn, "a function type", fty,
                    f"'{self._show(t.fn, binders)}' is applied but has type '{self._show(fty, binders)}'",
                )
            aty = self.infer_type(t.arg, ctx, binders)
            if not self.defeq(aty, fty.domain, ctx):
                raise TypeMismatchError(
                    t.arg, fty.domain, aty,
                    f"argument '{self._show(t.arg, binders)}' has type '{self._show(aty, binders)}'"
                    f" but '{self._show(fty.domain, binders)}' is expected",
                )
            return instantiate(fty.body, t.arg)
        if isinstance(t, Lam):
            self.ensure_sort(t.domain, ctx, binders)
            body_ty = self.infer_type(t.body, ctx, (t.domain,) + binders)
            return Pi(t.name, t.domain, body_ty)
        if isinstance(t, Pi):
            self.ensure_sort(t.domain, ctx, binders)
            self.ensure_sort(t.body, ctx, (t.domain,) + binders)
            return TYPE
        raise MalformedTermError(f"not a term: {t!r}")

    def ensure_sort(self, t: Term, ctx: Context, binders: Binders = ()) -> None:
        ty = self.whnf(self.infer_type(t, ctx, binders), ctx)
        if not isinstance(ty, Sort):
            raise TypeMismatchError(t, TYPE, ty, f"'{self._show(t, binders)}' is not a type")

    def check(self, t: Term, expected: Term, ctx: Context) -> None:
        actual = self.infer_type(t, ctx)
        if not self.defeq(actual, expected, ctx):
            raise TypeMismatchError(
                t, expected, actual,
                f"'{show(t)}' has type '{show(actual)}' but '{show(expected)}' is expected",
            )

    def check_declaration(self, decl: Declaration, ctx: Context) -> None:
        """Well-formedness of `decl` against the declarations before it."""
        self.ensure_sort(decl.type, ctx)
        if decl.value is None:
            return
        if decl.name in constants(decl.value):
            raise MalformedTermError(f"'{decl.name}' occurs in its own value")
        self.check(decl.value, decl.type, ctx)
        logger.debug("[KernelService] checked definition %s", decl.name)

    @staticmethod
    def _show(t: Term, binders: Binders) -> str:
        return show(t, [f"x{i}" for i in range(len(binders))])
