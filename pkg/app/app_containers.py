from dependency_injector import containers, providers
from app.v1_0.v1_containers import SolverContainer


class ApplicationContainer(containers.DeclarativeContainer):
    wiring_config = containers.WiringConfiguration(
        modules=[
                "app.main",
            ]
    )

    solver_container = providers.Container(
        SolverContainer
    )
