"""Surface-syntax printer for terms and problems.

Output re-parses to an alpha-equal term: binder names that would capture a
free name or an outer binder get primes appended.
"""
from typing import List, Sequence, Set

from app.v1_0.entities.declaration_DTO import Declaration
from app.v1_0.entities.problem_DTO import Problem
from app.v1_0.entities.term import App, Const, Lam, Pi, Sort, Term, Var, constants, occurs, unfold_apps

_BINDER, _ARROW, _APP, _ATOM = 0, 1, 2, 3


def show(t: Term, names: Sequence[str] = ()) -> str:
    """Print `t`; `names[i]` names the loose index i."""
    return _show(t, list(names), _BINDER)


def _fresh(hint: str, body: Term, names: List[str]) -> str:
    base = hint if hint and hint != "_" else "x"
    taken: Set[str] = constants(body) | set(names)
    out = base
    while out in taken:
        out += "'"
    return out


def _paren(s: str, level: int, needed: int) -> str:
    return f"({s})" if level > needed else s


def _show(t: Term, names: List[str], level: int) -> str:
    if isinstance(t, Var):
        return names[t.index] if t.index < len(names) else f"?{t.index}"
    if isinstance(t, Const):
        return t.name
    if isinstance(t, Sort):
        return "Type"
    if isinstance(t, App):
        head, args = unfold_apps(t)
        parts = [_show(head, names, _ATOM)] + [_show(a, names, _ATOM) for a in args]
        return _paren(" ".join(parts), level, _APP)
    if isinstance(t, Pi) and not occurs(t.body, 0):
        dom = _show(t.domain, names, _APP)
        cod = _show(t.body, ["_"] + names, _ARROW)
        return _paren(f"{dom} -> {cod}", level, _ARROW)
    if isinstance(t, (Lam, Pi)):
        keyword = "fun" if isinstance(t, Lam) else "Pi"
        groups: List[str] = []
        cur: Term = t
        scope = names
        while type(cur) is type(t) and not (isinstance(cur, Pi) and not occurs(cur.body, 0)):
            name = _fresh(cur.name, cur.body, scope)
            groups.append(f"({name} : {_show(cur.domain, scope, _BINDER)})")
            scope = [name] + scope
            cur = cur.body
        return _paren(f"{keyword} {' '.join(groups)}, {_show(cur, scope, _BINDER)}", level, _BINDER)
    raise TypeError(f"not a term: {t!r}")


def _equation(t: Term) -> str:
    head, args = unfold_apps(t)
    if head == Const("heq") and len(args) == 4:
        return f"{show(args[2])} == {show(args[3])}"
    if head == Const("eq") and len(args) == 3:
        return f"{show(args[1])} = {show(args[2])}"
    raise ValueError(f"not an equation: {show(t)}")


def show_declaration(decl: Declaration, keyword: str = "var") -> str:
    if keyword == "hyp":
        return f"hyp {decl.name} : {_equation(decl.type)}"
    if decl.value is not None:
        return f"def {decl.name} : {show(decl.type)} := {show(decl.value)}"
    return f"{keyword} {decl.name} : {show(decl.type)}"


def show_problem(problem: Problem) -> str:
    lines: List[str] = [show_declaration(d, "axiom") for d in problem.env]
    hyps = set(problem.hypotheses)
    for d in problem.ctx:
        lines.append(show_declaration(d, "hyp" if d.name in hyps else "var"))
    for s in problem.subsingletons:
        lines.append(f"subsingleton {show(s.type)} by {show(s.proof)}")
    lines.append(f"goal {_equation(problem.goal.statement)}")
    return "\n".join(lines) + "\n"
