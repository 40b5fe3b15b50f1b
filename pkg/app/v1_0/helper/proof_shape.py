"""Readable renderings of generated proofs.

The engine names every intermediate equality `e#k` and spells out all type
arguments. For reports the names are inlined, trivial reflexivity steps are
erased and a skeleton without type arguments is printed. None of this is fed
back to the checker.
"""
from typing import Dict, Optional

from app.v1_0.entities import App, Const, Context, Lam, Pi, Term, mk_app, unfold_apps
from app.v1_0.helper.io.printer import show

# explicit arguments dropped from the front of each step in the skeleton
_DROPPED = {
    "refl": 1,
    "hrefl": 1,
    "hsymm": 4,
    "htrans": 6,
    "ofeq": 3,
    "ofheq": 3,
}


def _head_name(t: Term) -> Optional[str]:
    return t.name if isinstance(t, Const) else None


def _is_hrefl(t: Term) -> bool:
    head, args = unfold_apps(t)
    return _head_name(head) == "hrefl" and len(args) == 2


def inline_generated(proof: Term, ctx: Context) -> Term:
    """Replace each generated `e#k` constant by its definition, transitively."""
    memo: Dict[str, Term] = {}

    def go(t: Term) -> Term:
        if isinstance(t, Const):
            if "#" not in t.name:
                return t
            if t.name not in memo:
                d = ctx.lookup(t.name)
                memo[t.name] = t if d is None or d.value is None else go(d.value)
            return memo[t.name]
        if isinstance(t, App):
            return App(go(t.fn), go(t.arg))
        if isinstance(t, Lam):
            return Lam(t.name, go(t.domain), go(t.body))
        if isinstance(t, Pi):
            return Pi(t.name, go(t.domain), go(t.body))
        return t

    return go(proof)


def simplify(proof: Term) -> Term:
    """Erase reflexivity steps and double symmetries, bottom up."""
    head, args = unfold_apps(proof)
    if not args:
        return proof
    args = [simplify(a) for a in args]
    name = _head_name(head)
    if name == "htrans" and len(args) == 8:
        p, q = args[6], args[7]
        if _is_hrefl(q):
            return p
        if _is_hrefl(p):
            return q
    elif name == "hsymm" and len(args) == 5:
        p = args[4]
        if _is_hrefl(p):
            return p
        inner, inner_args = unfold_apps(p)
        if _head_name(inner) == "hsymm" and len(inner_args) == 5:
            return inner_args[4]
    elif name == "ofheq" and len(args) == 4:
        p = args[3]
        inner, inner_args = unfold_apps(p)
        if _is_hrefl(p):
            return mk_app(Const("refl"), *inner_args)
        if _head_name(inner) == "ofeq" and len(inner_args) == 4:
            return inner_args[3]
    elif name == "ofeq" and len(args) == 4:
        inner, inner_args = unfold_apps(args[3])
        if _head_name(inner) == "refl" and len(inner_args) == 2:
            return mk_app(Const("hrefl"), *inner_args)
    return mk_app(head, *args)


def _dropped(name: str, nargs: int) -> int:
    if name in _DROPPED:
        return _DROPPED[name]
    if name.startswith("hsse<"):
        return 3
    if name.startswith("hcongr_"):
        try:
            n = int(name[len("hcongr_"):])
        except ValueError:
            return 0
        if nargs == 4 * n + 4:
            return -n
    return 0


def skeleton(proof: Term) -> Term:
    head, args = unfold_apps(proof)
    if not args:
        return proof
    name = _head_name(head) or ""
    drop = _dropped(name, len(args))
    if drop < 0:
        n = -drop
        # keep `f = g` and every `e_i`, skipping A_i, B, f, g, a_i, b_i
        kept = [args[n + 3]] + [args[n + 4 + 3 * i + 2] for i in range(n)]
    else:
        kept = args[drop:] if drop <= len(args) else args
    return mk_app(head, *(skeleton(a) for a in kept))


def compact(proof: Term, ctx: Context) -> str:
    """Skeleton of `proof`, with generated names inlined and no type arguments."""
    return show(skeleton(simplify(inline_generated(proof, ctx))))
