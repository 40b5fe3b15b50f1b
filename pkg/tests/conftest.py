import os

import pytest
from hypothesis import HealthCheck, settings

from app.v1_0.schemas import RunOptions
from app.v1_0.services import EqualityTheoryService, KernelService
from app.v1_0.v1_containers import SolverContainer
from tests.support import Solver

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def container() -> SolverContainer:
    return SolverContainer()


@pytest.fixture
def solver(container) -> Solver:
    return Solver(container)


@pytest.fixture
def theory(container) -> EqualityTheoryService:
    return container.equality_theory_service()


@pytest.fixture
def kernel(theory) -> KernelService:
    return theory.kernel


@pytest.fixture
def options() -> RunOptions:
    return RunOptions(check=True, subsingleton=True, trace=False, emit_partition=False, check_invariants=True)
