import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

from dependency_injector.wiring import Provide, inject

from app.core.logger import logger
from app.core.settings import settings
from app.app_containers import ApplicationContainer
from app.v1_0.entities import RunReport
from app.v1_0.helper.io.writers import write_reports
from app.v1_0.schemas import RunOptions
from app.v1_0.services import RunService


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hetcc",
        description="Decide heterogeneous equality goals by congruence closure and emit checked proofs.",
    )
    parser.add_argument("files", nargs="+", help="problem files")
    parser.add_argument("--trace", action="store_true", default=settings.TRACE,
                        help="print one line per merge on stderr")
    parser.add_argument("--no-check", dest="check", action="store_false", default=settings.CHECK_PROOFS,
                        help="skip the independent proof check")
    parser.add_argument("--no-subsingleton", dest="subsingleton", action="store_false",
                        default=settings.SUBSINGLETON, help="disable subsingleton propagation")
    parser.add_argument("--emit-partition", action="store_true", default=settings.EMIT_PARTITION,
                        help="print the final partition for proved goals too")
    parser.add_argument("--check-invariants", action="store_true", default=settings.CHECK_INVARIANTS,
                        help="verify the engine invariants after every merge")
    parser.add_argument("--jobs", "-j", type=int, default=settings.JOBS,
                        help="number of files solved in parallel")
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    return parser


@inject
def run_files(
    files: Sequence[str],
    options: RunOptions,
    run_service_factory: Callable[[], RunService] = Provide[ApplicationContainer.solver_container.run_service.provider],
) -> List[RunReport]:
    """Solve each file with its own solver; reports come back in argument order."""
    def one(path: str) -> RunReport:
        return run_service_factory().run_file(path, options)

    if options.jobs <= 1 or len(files) <= 1:
        return [one(f) for f in files]
    with ThreadPoolExecutor(max_workers=options.jobs) as pool:
        return list(pool.map(one, files))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs <= 0:
        build_parser().error("--jobs must be > 0")
    options = RunOptions(
        check=args.check,
        subsingleton=args.subsingleton,
        trace=args.trace,
        emit_partition=args.emit_partition,
        check_invariants=args.check_invariants,
        jobs=args.jobs,
    )

    container = ApplicationContainer()
    container.wire(modules=[sys.modules[__name__]])
    try:
        reports = run_files(args.files, options)
    finally:
        container.unwire()

    headers = [r.source or "" for r in reports] if len(reports) > 1 else None
    write_reports((r.text for r in reports), sys.stdout, headers)
    for r in reports:
        logger.info("%s: %s in %.3fs", r.source, r.status, r.elapsed)
    return max(r.exit_code for r in reports)


if __name__ == "__main__":
    sys.exit(main())
