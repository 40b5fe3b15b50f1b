from dataclasses import dataclass
from pathlib import Path
from typing import Union

from app.v1_0.entities import CCFailure, CCProof, CheckVerdict, FlatContext, Problem
from app.v1_0.services import CongruenceClosureService, EqualityTheoryService
from app.v1_0.v1_containers import SolverContainer

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@dataclass
class Solved:
    problem: Problem
    theory: EqualityTheoryService
    flat: FlatContext
    engine: CongruenceClosureService
    result: Union[CCProof, CCFailure]

    @property
    def proved(self) -> bool:
        return isinstance(self.result, CCProof)


class Solver:
    """Runs the pipeline stage by stage so tests can look at each stage."""

    def __init__(self, container: SolverContainer) -> None:
        self.container = container

    def parse(self, text: str) -> Problem:
        return self.container.problem_service().parse_problem(text)

    def solve(self, text: str, *, subsingleton: bool = True, check_invariants: bool = True) -> Solved:
        problem = self.parse(text)
        theory = self.container.equality_theory_service()
        if subsingleton:
            for decl in problem.subsingletons:
                theory.register_subsingleton(decl.type, decl.proof, problem.ctx)
        flat = self.container.flattener_service(kernel=theory.kernel, theory=theory).flatten(
            problem.ctx, problem.goal.statement, subsingletons=subsingleton
        )
        engine = self.container.cc_service(
            theory=theory,
            proof_builder=self.container.proof_builder_service(theory=theory),
            subsingletons=subsingleton,
            check_invariants=check_invariants,
        )
        return Solved(problem, theory, flat, engine, engine.solve(flat))

    def check(self, solved: Solved) -> CheckVerdict:
        assert isinstance(solved.result, CCProof)
        checker = self.container.checker_service(axiom_repository=solved.theory.axioms)
        return checker.check_proof(solved.result.proof, solved.result.statement, solved.result.ctx)
