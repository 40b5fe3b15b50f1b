"""Terms of the dependent lambda-calculus.

Bound variables are de Bruijn indices; binder names are kept only as printing
hints and take no part in equality, so `==` on terms is alpha-equivalence.
Every node caches a structural hash (deterministic across runs) and `lbv`, one
more than the largest loose bound index (0 for closed terms).
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple, Union

_MASK = (1 << 61) - 1


def hashcombine(h1: int, h2: int) -> int:
    return ((h1 * 1000003) ^ (h2 + 0x9E3779B97F4A7C15 + (h1 << 6) + (h1 >> 2))) & _MASK


def name_hash(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


@dataclass(frozen=True, slots=True)
class Var:
    index: int
    _hash: int = field(init=False, repr=False, compare=False)
    lbv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hashcombine(1, self.index))
        object.__setattr__(self, "lbv", self.index + 1)

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Const:
    name: str
    _hash: int = field(init=False, repr=False, compare=False)
    lbv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hashcombine(2, name_hash(self.name)))
        object.__setattr__(self, "lbv", 0)

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Sort:
    _hash: int = field(init=False, repr=False, compare=False)
    lbv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hashcombine(3, 0))
        object.__setattr__(self, "lbv", 0)

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"
    _hash: int = field(init=False, repr=False, compare=False)
    lbv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hashcombine(hashcombine(4, self.fn._hash), self.arg._hash))
        object.__setattr__(self, "lbv", max(self.fn.lbv, self.arg.lbv))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Lam:
    name: str = field(compare=False)
    domain: "Term"
    body: "Term"
    _hash: int = field(init=False, repr=False, compare=False)
    lbv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hashcombine(hashcombine(5, self.domain._hash), self.body._hash))
        object.__setattr__(self, "lbv", max(self.domain.lbv, self.body.lbv - 1, 0))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, slots=True)
class Pi:
    name: str = field(compare=False)
    domain: "Term"
    body: "Term"
    _hash: int = field(init=False, repr=False, compare=False)
    lbv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hashcombine(hashcombine(6, self.domain._hash), self.body._hash))
        object.__setattr__(self, "lbv", max(self.domain.lbv, self.body.lbv - 1, 0))

    def __hash__(self) -> int:
        return self._hash


Term = Union[Var, Const, Sort, App, Lam, Pi]

TYPE = Sort()

# prefix of statement-building placeholders; never a surface name
PLACEHOLDER = "?"


def term_hash(t: Term) -> int:
    return t._hash


def mk_app(fn: Term, *args: Term) -> Term:
    out = fn
    for a in args:
        out = App(out, a)
    return out


def mk_apps(fn: Term, args: Iterable[Term]) -> Term:
    return mk_app(fn, *args)


def unfold_apps(t: Term) -> Tuple[Term, List[Term]]:
    args: List[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def arrow(dom: Term, cod: Term) -> Pi:
    """Non-dependent function space; `cod` is given without the extra binder."""
    return Pi("_", dom, lift(cod, 1))


# ---------- de Bruijn plumbing ----------
def lift(t: Term, amount: int, cutoff: int = 0) -> Term:
    if amount == 0 or t.lbv <= cutoff:
        return t
    if isinstance(t, Var):
        return Var(t.index + amount) if t.index >= cutoff else t
    if isinstance(t, App):
        return App(lift(t.fn, amount, cutoff), lift(t.arg, amount, cutoff))
    if isinstance(t, Lam):
        return Lam(t.name, lift(t.domain, amount, cutoff), lift(t.body, amount, cutoff + 1))
    if isinstance(t, Pi):
        return Pi(t.name, lift(t.domain, amount, cutoff), lift(t.body, amount, cutoff + 1))
    return t


def instantiate(body: Term, value: Term) -> Term:
    """Substitute `value` for index 0 in `body`, lowering the other loose indices."""
    return _subst(body, 0, value)


def _subst(t: Term, depth: int, value: Term) -> Term:
    if t.lbv <= depth:
        return t
    if isinstance(t, Var):
        if t.index == depth:
            return lift(value, depth)
        return Var(t.index - 1) if t.index > depth else t
    if isinstance(t, App):
        return App(_subst(t.fn, depth, value), _subst(t.arg, depth, value))
    if isinstance(t, Lam):
        return Lam(t.name, _subst(t.domain, depth, value), _subst(t.body, depth + 1, value))
    if isinstance(t, Pi):
        return Pi(t.name, _subst(t.domain, depth, value), _subst(t.body, depth + 1, value))
    return t


def occurs(t: Term, index: int) -> bool:
    if t.lbv <= index:
        return False
    if isinstance(t, Var):
        return t.index == index
    if isinstance(t, App):
        return occurs(t.fn, index) or occurs(t.arg, index)
    if isinstance(t, (Lam, Pi)):
        return occurs(t.domain, index) or occurs(t.body, index + 1)
    return False


def lower(t: Term) -> Term:
    """Drop one binder around a term in which index 0 does not occur."""
    return _subst(t, 0, Var(0)) if t.lbv else t


def abstract(t: Term, name: str, depth: int = 0) -> Term:
    """Turn every `Const(name)` into the bound variable introduced `depth` binders up."""
    if isinstance(t, Const):
        return Var(depth) if t.name == name else t
    if isinstance(t, Var):
        return Var(t.index + 1) if t.index >= depth else t
    if isinstance(t, App):
        return App(abstract(t.fn, name, depth), abstract(t.arg, name, depth))
    if isinstance(t, Lam):
        return Lam(t.name, abstract(t.domain, name, depth), abstract(t.body, name, depth + 1))
    if isinstance(t, Pi):
        return Pi(t.name, abstract(t.domain, name, depth), abstract(t.body, name, depth + 1))
    return t


def bound(name: str) -> Const:
    """Placeholder for a binder that `mk_pi`/`mk_lam` will close over."""
    return Const(PLACEHOLDER + name)


def mk_pi(binders: Sequence[Tuple[str, Term]], body: Term) -> Term:
    out = body
    for name, ty in reversed(binders):
        out = Pi(name, ty, abstract(out, PLACEHOLDER + name))
    return out


def mk_lam(binders: Sequence[Tuple[str, Term]], body: Term) -> Term:
    out = body
    for name, ty in reversed(binders):
        out = Lam(name, ty, abstract(out, PLACEHOLDER + name))
    return out


def constants(t: Term) -> set[str]:
    out: set[str] = set()
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, Const):
            out.add(x.name)
        elif isinstance(x, App):
            stack.extend((x.fn, x.arg))
        elif isinstance(x, (Lam, Pi)):
            stack.extend((x.domain, x.body))
    return out


TERM_CLASSES = (Var, Const, Sort, App, Lam, Pi)


def is_term(x: object) -> bool:
    return isinstance(x, TERM_CLASSES)
