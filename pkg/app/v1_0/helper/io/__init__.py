from .grammar import GRAMMAR
from .printer import show, show_declaration, show_problem
from .readers import RawCommand, read_problem, read_problem_file
from .writers import render_error, render_proved, render_rejected, render_unknown, write_reports

__all__ = [
    "GRAMMAR",
    "show",
    "show_declaration",
    "show_problem",
    "RawCommand",
    "read_problem",
    "read_problem_file",
    "render_error",
    "render_proved",
    "render_rejected",
    "render_unknown",
    "write_reports",
]
