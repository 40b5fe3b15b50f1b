from pathlib import Path
from typing import Callable, Optional

from app.core.errors import HetccError
from app.core.logger import logger
from app.v1_0.entities import CCFailure, EXIT_CODES, Problem, RunReport
from app.v1_0.helper.io.printer import show
from app.v1_0.helper.io.readers import read_problem_file
from app.v1_0.helper.io.writers import render_error, render_proved, render_rejected, render_unknown
from app.v1_0.helper.proof_shape import compact
from app.v1_0.schemas import RunOptions
from app.v1_0.services.cc_service import CongruenceClosureService
from app.v1_0.services.checker_service import CheckerService
from app.v1_0.services.equality_theory_service import EqualityTheoryService
from app.v1_0.services.flattener_service import FlattenerService
from app.v1_0.services.problem_service import ProblemService
from app.v1_0.services.proof_builder_service import ProofBuilderService
from app.utils.timing import stopwatch


class RunService:
    """Parse, flatten, solve and check one problem per call.

    Every call builds its own kernel, axiom table and engine through the
    injected providers, so separate calls may run on separate threads.
    """

    def __init__(
        self,
        problem_factory: Callable[..., ProblemService],
        theory_factory: Callable[..., EqualityTheoryService],
        flattener_factory: Callable[..., FlattenerService],
        proof_builder_factory: Callable[..., ProofBuilderService],
        cc_factory: Callable[..., CongruenceClosureService],
        checker_factory: Callable[..., CheckerService],
    ) -> None:
        self._problem_factory = problem_factory
        self._theory_factory = theory_factory
        self._flattener_factory = flattener_factory
        self._proof_builder_factory = proof_builder_factory
        self._cc_factory = cc_factory
        self._checker_factory = checker_factory

    def run_file(self, path: str | Path, options: RunOptions) -> RunReport:
        source = str(path)
        try:
            text = read_problem_file(path)
        except (OSError, UnicodeDecodeError) as e:
            logger.error("[RunService] cannot read %s: %s", source, e)
            return RunReport("ERROR", EXIT_CODES["ERROR"], render_error(str(e), source), source)
        return self.run_text(text, options, source)

    def run_text(self, text: str, options: RunOptions, source: Optional[str] = None) -> RunReport:
        """Run the whole pipeline; errors become ERROR reports, never exceptions."""
        with stopwatch() as sw:
            try:
                problem = self._problem_factory().parse_problem(text, source)
                report = self.run(problem, options)
            except HetccError as e:
                logger.error("[RunService] %s: %s", source or "<text>", e.detail)
                report = RunReport("ERROR", e.exit_code, render_error(e.detail, source), source)
            except RecursionError as e:
                logger.error("[RunService] %s: recursion limit hit", source or "<text>", exc_info=True)
                report = RunReport("ERROR", 3, render_error(f"recursion limit exceeded: {e}", source), source)
        report.elapsed = sw.elapsed
        return report

    def run(self, problem: Problem, options: RunOptions) -> RunReport:
        """Solve an elaborated problem and, unless disabled, check the proof.

        Raises:
            HetccError: a subsingleton declaration is rejected, the goal is not
                an equality, or the engine breaks an invariant.
        """
        theory = self._theory_factory()
        if options.subsingleton:
            for decl in problem.subsingletons:
                theory.register_subsingleton(decl.type, decl.proof, problem.ctx)

        flat = self._flattener_factory(kernel=theory.kernel, theory=theory).flatten(
            problem.ctx, problem.goal.statement, subsingletons=options.subsingleton
        )
        engine = self._cc_factory(
            theory=theory,
            proof_builder=self._proof_builder_factory(theory=theory),
            subsingletons=options.subsingleton,
            trace=options.trace,
            check_invariants=options.check_invariants,
        )
        result = engine.solve(flat)
        goal = show(problem.goal.statement)
        source = problem.source

        if isinstance(result, CCFailure):
            return RunReport("UNKNOWN", EXIT_CODES["UNKNOWN"], render_unknown(goal, result), source)

        verdict = None
        if options.check:
            verdict = self._checker_factory(axiom_repository=theory.axioms).check_proof(
                result.proof, result.statement, result.ctx
            )
            if not verdict.ok:
                return RunReport("REJECTED", EXIT_CODES["REJECTED"], render_rejected(goal, result.proof, verdict), source)

        text = render_proved(
            goal,
            result.proof,
            compact(result.proof, result.ctx),
            verdict,
            result.partition if options.emit_partition else None,
        )
        logger.info("[RunService] %s proved in %d merges", source or "<text>", result.steps)
        return RunReport("PROVED", EXIT_CODES["PROVED"], text, source)
