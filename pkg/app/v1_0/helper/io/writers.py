from typing import Iterable, List, Optional, Sequence, TextIO

from app.v1_0.entities import CCFailure, CheckVerdict, Term
from app.v1_0.helper.io.printer import show


def _partition_lines(partition: Sequence[Sequence[str]]) -> List[str]:
    return ["partition:"] + [f"  {{{', '.join(cls)}}}" for cls in partition]


def render_proved(
    goal: str,
    proof: Term,
    compact: str,
    verdict: Optional[CheckVerdict],
    partition: Optional[Sequence[Sequence[str]]] = None,
) -> str:
    lines = [
        "PROVED",
        f"goal: {goal}",
        f"proof: {show(proof)}",
        f"compact: {compact}",
        f"check: {'skipped' if verdict is None else 'ok'}",
    ]
    if partition:
        lines += _partition_lines(partition)
    return "\n".join(lines) + "\n"


def render_unknown(goal: str, failure: CCFailure) -> str:
    lines = ["UNKNOWN", f"goal: {goal}"]
    lines += _partition_lines(failure.partition)
    lines.append(f"congrtable: {failure.congrtable_size}")
    return "\n".join(lines) + "\n"


def render_rejected(goal: str, proof: Term, verdict: CheckVerdict) -> str:
    lines = [
        "REJECTED",
        f"goal: {goal}",
        f"proof: {show(proof)}",
        f"location: {verdict.location}",
    ]
    if verdict.expected is not None:
        lines.append(f"expected: {show(verdict.expected)}")
    if verdict.actual is not None:
        lines.append(f"actual: {show(verdict.actual)}")
    lines += [f"note: {n}" for n in verdict.notes]
    return "\n".join(lines) + "\n"


def render_error(detail: str, source: Optional[str] = None) -> str:
    where = f"{source}: " if source else ""
    return f"ERROR\nerror: {where}{detail}\n"


def write_reports(texts: Iterable[str], out: TextIO, headers: Optional[Sequence[str]] = None) -> None:
    """Write reports in order; with `headers`, each one is preceded by `== <header>`."""
    for i, text in enumerate(texts):
        if headers is not None:
            out.write(f"== {headers[i]}\n")
        out.write(text)
    out.flush()
