from typing import List, Optional, Tuple

from app.core.errors import ElaborationError, KernelError
from app.core.logger import logger
from app.v1_0.entities import (
    Context,
    Declaration,
    Environment,
    Goal,
    Problem,
    SubsingletonDecl,
    Term,
)
from app.v1_0.helper.io.printer import show
from app.v1_0.helper.io.readers import RawCommand, read_problem
from app.v1_0.services.equality_theory_service import EqualityTheoryService

_RESERVED_PREFIXES = ("hcongr_", "hsse")


class ProblemService:
    """Turns problem text into a checked `Problem`.

    Axioms form the global environment and are elaborated first, in order.
    Variables, definitions and hypotheses then form the local context; every
    declaration is kernel-checked against the ones before it.
    """

    def __init__(self, theory: EqualityTheoryService) -> None:
        self.theory = theory
        self.kernel = theory.kernel

    def parse_problem(self, text: str, source: Optional[str] = None) -> Problem:
        """Parse and elaborate a problem.

        Raises:
            ProblemSyntaxError: the text does not match the grammar.
            ElaborationError: a declaration or the goal is ill-typed, a name is
                declared twice or clashes with a built-in, or the number of
                goals is not exactly one.
        """
        commands = read_problem(text)
        goals = [c for c in commands if c.kind == "goal"]
        if not goals:
            raise ElaborationError("problem has no goal")
        if len(goals) > 1:
            raise ElaborationError("problem has more than one goal", goals[1].line)

        env = Environment()
        for cmd in commands:
            if cmd.kind == "axiom":
                env = Environment(env.decls + (self._declare(cmd, env),))

        ctx = Context(env=env)
        hypotheses: List[str] = []
        subsingletons: List[SubsingletonDecl] = []
        for cmd in commands:
            if cmd.kind in ("var", "def", "hyp"):
                ctx = ctx.extend(self._declare(cmd, ctx))
                if cmd.kind == "hyp":
                    hypotheses.append(cmd.name)
            elif cmd.kind == "subsingleton":
                subsingletons.append(SubsingletonDecl(cmd.terms[0], cmd.terms[1], cmd.line))

        goal = self._goal(goals[0], ctx)
        logger.info(
            "[ProblemService] %s: %d axioms, %d declarations, %d hypotheses",
            source or "<text>", len(env), len(ctx), len(hypotheses),
        )
        return Problem(env, ctx, goal, hypotheses, subsingletons, source)

    # ---------- declarations ----------
    def _declare(self, cmd: RawCommand, ctx: Context) -> Declaration:
        name = cmd.name or ""
        if name in ctx:
            raise ElaborationError(f"'{name}' is declared twice", cmd.line)
        if self.theory.axioms.has(name) or name.startswith(_RESERVED_PREFIXES):
            raise ElaborationError(f"'{name}' is a reserved name", cmd.line)

        if cmd.kind == "hyp":
            statement, _ = self._equation(cmd, ctx)
            decl = Declaration(name, statement)
        elif cmd.kind == "def":
            decl = Declaration(name, cmd.terms[0], cmd.terms[1])
        else:
            decl = Declaration(name, cmd.terms[0])
        try:
            self.kernel.check_declaration(decl, ctx)
        except KernelError as e:
            raise ElaborationError(f"{cmd.kind} {name}: {e.detail}", cmd.line) from e
        logger.debug("[ProblemService] %s %s accepted", cmd.kind, name)
        return decl

    def _equation(self, cmd: RawCommand, ctx: Context) -> Tuple[Term, bool]:
        lhs, rhs = cmd.terms
        try:
            A = self.kernel.infer_type(lhs, ctx)
            B = self.kernel.infer_type(rhs, ctx)
            homogeneous = cmd.op == "="
            if homogeneous and not self.kernel.defeq(A, B, ctx):
                raise ElaborationError(
                    f"'{show(lhs)} = {show(rhs)}' relates '{show(A)}' and '{show(B)}'; use == instead",
                    cmd.line,
                )
        except KernelError as e:
            raise ElaborationError(f"{cmd.kind}: {e.detail}", cmd.line) from e
        if homogeneous:
            return self.theory.eq_type(A, lhs, rhs), True
        return self.theory.heq_type(A, B, lhs, rhs), False

    def _goal(self, cmd: RawCommand, ctx: Context) -> Goal:
        statement, homogeneous = self._equation(cmd, ctx)
        return Goal(cmd.terms[0], cmd.terms[1], homogeneous, statement)
