from app.core.errors import KernelError, TypeMismatchError
from app.core.logger import logger
from app.v1_0.entities import CheckVerdict, Context, Term
from app.v1_0.entities.term import is_term
from app.v1_0.helper.io.printer import show
from app.v1_0.repositories import AxiomRepository
from app.v1_0.services.kernel_service import KernelService


def _generated(name: str) -> bool:
    return "#" in name


class CheckerService:
    """Re-checks emitted proofs with a kernel of its own.

    Trusts only the kernel and the axiom table. Every solver-generated
    definition in the context is re-checked in order before the proof itself.
    """

    def __init__(self, axiom_repository: AxiomRepository) -> None:
        self.axioms = axiom_repository

    def check_proof(self, p: Term, statement: Term, ctx: Context) -> CheckVerdict:
        """Verdict on `p : statement` in `ctx`.

        Returns:
            CheckVerdict(ok=True) when the inferred type of `p` is definitionally
            equal to `statement`; otherwise the failing location and, when
            known, the expected and actual types.
        """
        kernel = KernelService(self.axioms)
        current = Context((d for d in ctx if not _generated(d.name)), env=ctx.env)
        for decl in ctx:
            if not _generated(decl.name):
                continue
            try:
                kernel.check_declaration(decl, current)
            except TypeMismatchError as e:
                return self._reject(decl.name, e.expected, e.actual, e.detail)
            except KernelError as e:
                return self._reject(decl.name, None, None, e.detail)
            current = current.extend(decl)

        try:
            kernel.ensure_sort(statement, current)
            actual = kernel.infer_type(p, current)
        except TypeMismatchError as e:
            return self._reject(show(e.subterm) if is_term(e.subterm) else "proof",
                                e.expected, e.actual, e.detail)
        except KernelError as e:
            return self._reject("proof", None, None, e.detail)

        if not kernel.defeq(actual, statement, current):
            return self._reject("proof", statement, actual, "proof does not prove the statement")
        logger.debug("[CheckerService] proof accepted")
        return CheckVerdict(ok=True)

    @staticmethod
    def _reject(location: str, expected, actual, detail: str) -> CheckVerdict:
        logger.error("[CheckerService] rejected at %s: %s", location, detail)
        return CheckVerdict(
            ok=False,
            location=location,
            expected=expected if is_term(expected) else None,
            actual=actual if is_term(actual) else None,
            notes=[detail],
        )
