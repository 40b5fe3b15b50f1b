from .kernel_service import KernelService
from .equality_theory_service import EqualityTheoryService
from .flattener_service import FlattenerService
from .proof_builder_service import ProofBuilderService
from .cc_service import CongruenceClosureService
from .checker_service import CheckerService
from .problem_service import ProblemService
from .run_service import RunService

__all__ = [
    "KernelService",
    "EqualityTheoryService",
    "FlattenerService",
    "ProofBuilderService",
    "CongruenceClosureService",
    "CheckerService",
    "ProblemService",
    "RunService",
]
