from dependency_injector import containers, providers
from app.v1_0.repositories import AxiomRepository, SubsingletonRepository
from app.v1_0.services import (
    KernelService,
    EqualityTheoryService,
    FlattenerService,
    ProofBuilderService,
    CongruenceClosureService,
    CheckerService,
    ProblemService,
    RunService,
    )


class SolverContainer(containers.DeclarativeContainer):
    # every solve gets fresh tables and caches
    axiom_repository = providers.Factory(AxiomRepository)
    subsingleton_repository = providers.Factory(SubsingletonRepository)

    kernel_service = providers.Factory(KernelService, axiom_repository=axiom_repository)
    equality_theory_service = providers.Factory(
        EqualityTheoryService,
        kernel=kernel_service,
        subsingleton_repository=subsingleton_repository,
    )
    flattener_service = providers.Factory(FlattenerService)
    proof_builder_service = providers.Factory(ProofBuilderService)
    cc_service = providers.Factory(CongruenceClosureService)
    checker_service = providers.Factory(CheckerService)
    problem_service = providers.Factory(ProblemService, theory=equality_theory_service)

    run_service = providers.Factory(
        RunService,
        problem_factory=problem_service.provider,
        theory_factory=equality_theory_service.provider,
        flattener_factory=flattener_service.provider,
        proof_builder_factory=proof_builder_service.provider,
        cc_factory=cc_service.provider,
        checker_factory=checker_service.provider,
    )
