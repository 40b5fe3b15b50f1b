import threading
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from app.core.errors import ProblemSyntaxError
from app.v1_0.entities import App, Const, Lam, Pi, Term, TYPE, abstract, arrow
from app.v1_0.helper.io.grammar import GRAMMAR


@dataclass(frozen=True, slots=True)
class RawCommand:
    """One parsed line; names are still unresolved constants."""
    kind: str
    line: int
    column: int
    name: Optional[str] = None
    terms: Tuple[Term, ...] = ()
    op: Optional[str] = None


def _bind(kind: type, groups: List[Tuple[List[str], Term]], body: Term) -> Term:
    binders = [(name, ty) for names, ty in groups for name in names]
    for name, ty in reversed(binders):
        body = kind(name, ty, abstract(body, name))
    return body


@v_args(inline=True)
class _TermBuilder(Transformer):
    def name(self, tok: Token) -> Term:
        return Const(str(tok))

    def sort(self) -> Term:
        return TYPE

    def application(self, fn: Term, arg: Term) -> Term:
        return App(fn, arg)

    def function_type(self, dom: Term, cod: Term) -> Term:
        return arrow(dom, cod)

    def binder(self, *children):
        *names, ty = children
        return [str(n) for n in names], ty

    def pi(self, *children) -> Term:
        *groups, body = children
        return _bind(Pi, groups, body)

    def lam(self, *children) -> Term:
        *groups, body = children
        return _bind(Lam, groups, body)


class _CommandBuilder(_TermBuilder):
    @v_args(meta=True)
    def axiom(self, meta, children) -> RawCommand:
        return RawCommand("axiom", meta.line, meta.column, str(children[0]), (children[1],))

    @v_args(meta=True)
    def var(self, meta, children) -> RawCommand:
        return RawCommand("var", meta.line, meta.column, str(children[0]), (children[1],))

    @v_args(meta=True)
    def definition(self, meta, children) -> RawCommand:
        return RawCommand("def", meta.line, meta.column, str(children[0]), (children[1], children[2]))

    @v_args(meta=True)
    def hyp(self, meta, children) -> RawCommand:
        name, lhs, op, rhs = children
        return RawCommand("hyp", meta.line, meta.column, str(name), (lhs, rhs), str(op))

    @v_args(meta=True)
    def subsingleton(self, meta, children) -> RawCommand:
        return RawCommand("subsingleton", meta.line, meta.column, None, (children[0], children[1]))

    @v_args(meta=True)
    def goal(self, meta, children) -> RawCommand:
        lhs, op, rhs = children
        return RawCommand("goal", meta.line, meta.column, None, (lhs, rhs), str(op))

    def start(self, commands) -> List[RawCommand]:
        return list(commands)


_local = threading.local()


def _parser() -> Lark:
    parser = getattr(_local, "parser", None)
    if parser is None:
        parser = _local.parser = Lark(GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=False)
    return parser


def read_problem(text: str) -> List[RawCommand]:
    """Parse problem text into commands, in source order.

    Raises:
        ProblemSyntaxError: with the offending line and column.
    """
    if not text.endswith("\n"):
        text += "\n"
    try:
        tree = _parser().parse(text)
        return _CommandBuilder().transform(tree)
    except UnexpectedCharacters as e:
        raise ProblemSyntaxError(f"unexpected character {text[e.pos_in_stream]!r}", e.line, e.column) from e
    except UnexpectedEOF as e:
        raise ProblemSyntaxError("unexpected end of input", max(e.line, 1), max(e.column, 1)) from e
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        what = "end of line" if token is not None and token.type == "_NL" else repr(str(token))
        raise ProblemSyntaxError(f"unexpected {what}", e.line, e.column) from e
    except VisitError as e:
        raise ProblemSyntaxError(f"malformed command: {e.orig_exc}", 0, 0) from e


def read_problem_file(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")
